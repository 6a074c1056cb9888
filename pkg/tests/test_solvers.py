import unittest

from orienthull import errors
from orienthull.config import enforce_config_constraints, solver_config
from orienthull.convexity.interval import is_geodetic_set, is_hull_set
from orienthull.convexity.solvers import (
    HULL,
    all_minimum_geodetic_sets,
    all_minimum_hull_sets,
    all_minimum_sets,
    min_geodetic_set,
    min_hull_set,
)
from orienthull.convexity.undirected import (
    simplicial_vertices,
    undirected_hull,
    undirected_interval,
    undirected_min_geodetic_set,
    undirected_min_hull_set,
)
from orienthull.graph.digraph import build_undirected
from orienthull.graph.vertex_set import VertexSet
from orienthull.transforms import generators
from orienthull.transforms.random_graphs import random_orientation
from tests.config import consts
from tests.data_utils import directed_c3, random_trees


class TestExactSolvers(unittest.TestCase):
    def test_directed_c3(self):
        D = directed_c3()
        hull_result = min_hull_set(D)
        geo_result = min_geodetic_set(D)
        self.assertEqual(hull_result.optimum, 2)
        self.assertEqual(geo_result.optimum, 2)
        self.assertEqual(hull_result.witness.members, (0, 1))
        self.assertGreaterEqual(hull_result.nodes_explored, 1)

    def test_tight_examples(self):
        for k in consts.tight_ks:
            D = generators.tight_example(k)
            result = min_hull_set(D)
            self.assertEqual(result.optimum, 2 * k)
            self.assertTrue(is_hull_set(D, result.witness))

    def test_transitive_tournaments(self):
        for k in consts.transitive_ks:
            D = generators.transitive_tournament(k)
            self.assertEqual(min_hull_set(D).optimum, k)
            self.assertEqual(min_geodetic_set(D).optimum, k)

    def test_all_minimum_sets(self):
        sets = all_minimum_hull_sets(directed_c3())
        self.assertEqual(
            [s.members for s in sets], [(0, 1), (0, 2), (1, 2)]
        )
        for s in all_minimum_geodetic_sets(generators.directed_cycle(4)):
            self.assertTrue(is_geodetic_set(generators.directed_cycle(4), s))

    def test_parallel_matches_serial(self):
        D = generators.tight_example(3)
        serial = min_hull_set(D)
        parallel = min_hull_set(D, solver_config("parallel"))
        self.assertEqual(serial.optimum, parallel.optimum)
        self.assertEqual(serial.witness, parallel.witness)

    def test_too_large(self):
        with self.assertRaises(errors.InstanceTooLargeError):
            min_hull_set(generators.directed_cycle(20), solver_config("quick"))
        with self.assertRaises(errors.InstanceTooLargeError):
            min_geodetic_set(generators.directed_cycle(25))

    def test_trees_have_unique_minimum(self):
        # Searching without forcing ext(D) still finds ext(D) only
        for seed, D in random_trees(40, consts.trees.unique_max_n, min_n=2):
            free = VertexSet.empty(D.n)
            hull_sets = all_minimum_sets(D, HULL, forced=free)
            self.assertEqual(len(hull_sets), 1, msg=f"seed {seed}")
            self.assertEqual(
                hull_sets[0], min_geodetic_set(D).witness, msg=f"seed {seed}"
            )


class TestUndirectedSolvers(unittest.TestCase):
    def test_interval_and_hull(self):
        G = generators.path_graph(4)
        ends = VertexSet.of(4, [0, 3])
        self.assertTrue(undirected_interval(G, ends).is_full())
        self.assertEqual(simplicial_vertices(G), ends)
        G = generators.cycle_graph(6)
        S = VertexSet.of(6, [0, 2])
        self.assertEqual(undirected_interval(G, S).members, (0, 1, 2))
        self.assertEqual(undirected_hull(G, S).members, (0, 1, 2))

    def test_cycles(self):
        self.assertEqual(undirected_min_hull_set(generators.cycle_graph(6)).optimum, 2)
        self.assertEqual(undirected_min_hull_set(generators.cycle_graph(3)).optimum, 3)
        self.assertEqual(
            undirected_min_geodetic_set(generators.cycle_graph(4)).optimum, 2
        )
        self.assertEqual(
            undirected_min_geodetic_set(generators.cycle_graph(5)).optimum, 3
        )

    def test_trees(self):
        self.assertEqual(undirected_min_hull_set(generators.path_graph(5)).optimum, 2)
        self.assertEqual(undirected_min_hull_set(generators.star_graph(4)).optimum, 4)

    def test_disconnected(self):
        with self.assertRaises(errors.DisconnectedError):
            undirected_min_hull_set(build_undirected(4, [(0, 1), (2, 3)]))

    def test_orientation_needs_ext(self):
        # An orientation can only raise the count through forced extremes
        D = random_orientation(generators.path_graph(5), seed=consts.seed)
        self.assertLessEqual(
            undirected_min_hull_set(generators.path_graph(5)).optimum,
            min_hull_set(D).optimum,
        )


class TestConfig(unittest.TestCase):
    def test_presets(self):
        self.assertEqual(solver_config().solver.max_free_vertices, 24)
        self.assertEqual(solver_config("desk").solver.max_free_vertices, 28)
        self.assertEqual(solver_config("parallel").solver.num_workers, 4)
        self.assertFalse(solver_config("quick").solver.verify_witnesses)
        with self.assertRaises(ValueError):
            solver_config("nonexistent")

    def test_shared_seed(self):
        c = solver_config()
        c.random.seed = 7
        self.assertEqual(c.cli.seed, 7)

    def test_constraints(self):
        c = solver_config()
        c.random.edge_probability = 1.5
        with self.assertRaises(ValueError):
            enforce_config_constraints(c)
        c = solver_config()
        c.random.max_cycle_length = 2
        with self.assertRaises(ValueError):
            enforce_config_constraints(c)


if __name__ == "__main__":
    unittest.main()
