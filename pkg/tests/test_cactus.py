import unittest

from orienthull import errors
from orienthull.cactus.certificates import (
    coconvex_certificate,
    forcing_set_holds,
    geodetic_forcing_set,
)
from orienthull.cactus.cycles import CycleClass, classify_cycles
from orienthull.cactus.solver import (
    min_geodetic_set_cactus,
    min_hull_set_cactus,
    solve_cactus,
    tree_solution,
)
from orienthull.config import solver_config
from orienthull.convexity.extreme import ext_set
from orienthull.convexity.interval import (
    hull_rounds,
    is_coconvex,
    is_geodetic_set,
    is_hull_set,
)
from orienthull.convexity.solvers import GEODETIC, HULL, min_geodetic_set, min_hull_set
from orienthull.graph.digraph import build_graph
from orienthull.graph.vertex_set import VertexSet
from orienthull.transforms import generators
import tests.compare_utils as compare_utils
from tests.config import consts
from tests.data_utils import (
    fsc1_cactus,
    fsc2_cactus,
    random_cacti,
    random_trees,
    shared_vertex_cycles,
    stream_cactus,
    trap_transmitter_cactus,
    tsc_cactus,
    uc2_cactus,
    uc3_cycle,
    unreached_uc2_cactus,
)


def _only_cycle(D):
    cycles = classify_cycles(D)
    assert len(cycles) == 1
    return cycles[0]


class TestClassification(unittest.TestCase):
    def test_trap_transmitter(self):
        c = _only_cycle(trap_transmitter_cactus())
        self.assertEqual(c.cls, CycleClass.TRAP_TRANSMITTER)
        self.assertTrue(c.is_directed)
        self.assertEqual(c.tcv, (0,))
        self.assertEqual(c.rcv, ())
        self.assertEqual(c.choice, 1)

    def test_trap_receiver(self):
        D = build_graph(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
        c = _only_cycle(D)
        self.assertEqual(c.cls, CycleClass.TRAP_RECEIVER)
        self.assertEqual(c.choice, 2)

    def test_uc2(self):
        c = _only_cycle(uc2_cactus())
        self.assertEqual(c.cls, CycleClass.UC2)
        self.assertEqual(c.choice, 1)

    def test_uc2_choice_on_reachable_side(self):
        D = unreached_uc2_cactus()
        c = next(c for c in classify_cycles(D) if set(c.vertices) == {6, 7, 8})
        self.assertEqual(c.cls, CycleClass.UC2)
        self.assertEqual(c.active_tcv, (6,))
        self.assertEqual(c.active_rcv, ())
        self.assertEqual(c.choice, 8)
        self.assertEqual(c.candidates, (8, 7))

    def test_dual_role_cut_vertex_acts_on_active_side(self):
        D = stream_cactus(73)
        c = next(
            c for c in classify_cycles(D) if set(c.vertices) == {1, 6, 7, 8, 9}
        )
        self.assertEqual(c.cls, CycleClass.FSC1)
        self.assertIn(9, c.gap)

    def test_uc3(self):
        c = _only_cycle(uc3_cycle())
        self.assertEqual(c.cls, CycleClass.UC3)
        self.assertEqual(c.witnesses["long_path"], (0, 3, 2, 1))
        self.assertEqual(c.witnesses["short_path"], (0, 1))
        self.assertEqual(c.choice, 2)

    def test_fsc1(self):
        c = _only_cycle(fsc1_cactus())
        self.assertEqual(c.cls, CycleClass.FSC1)
        self.assertEqual(c.rcv, (2,))
        self.assertEqual(c.gap, (1,))
        self.assertEqual(c.choice, 1)

    def test_fsc1_without_room_is_tsc(self):
        D = build_graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (5, 1)])
        self.assertEqual(_only_cycle(D).cls, CycleClass.TSC)
        self.assertEqual(min_geodetic_set_cactus(D).size, 3)

    def test_fsc2(self):
        c = _only_cycle(fsc2_cactus())
        self.assertEqual(c.cls, CycleClass.FSC2)
        self.assertEqual(c.vertices, (0, 1, 2, 3))
        self.assertEqual(c.gap, (2, 3))
        self.assertEqual(c.choice, 2)
        self.assertEqual(c.witnesses["v1"], (0,))
        self.assertEqual(c.witnesses["v2"], (1,))

    def test_tsc(self):
        self.assertEqual(_only_cycle(tsc_cactus()).cls, CycleClass.TSC)

    def test_transitive_triangle_is_tsc(self):
        D = build_graph(4, [(0, 1), (1, 2), (0, 2), (1, 3)])
        self.assertEqual(_only_cycle(D).cls, CycleClass.TSC)

    def test_cycle_navigation(self):
        c = _only_cycle(fsc2_cactus())
        self.assertEqual(c.successor(3), 0)
        self.assertEqual(c.predecessor(0), 3)

    def test_not_a_cactus(self):
        with self.assertRaises(errors.NotACactusError):
            classify_cycles(generators.transitive_tournament(4))


class TestCertificates(unittest.TestCase):
    def test_coconvex(self):
        for D in (trap_transmitter_cactus(), uc2_cactus(), uc3_cycle()):
            c = _only_cycle(D)
            K = coconvex_certificate(D, c)
            self.assertTrue(is_coconvex(D, K), msg=c.cls.value)
            self.assertTrue(K.isdisjoint(ext_set(D)), msg=c.cls.value)

    def test_uc2_certificate_skips_cut_vertex(self):
        D = uc2_cactus()
        K = coconvex_certificate(D, _only_cycle(D))
        self.assertEqual(K.members, (1, 2))

    def test_tsc_has_no_certificate(self):
        D = tsc_cactus()
        c = _only_cycle(D)
        with self.assertRaises(errors.CycleIsTSCError):
            coconvex_certificate(D, c)
        with self.assertRaises(errors.CycleIsTSCError):
            geodetic_forcing_set(D, c)

    def test_forcing_sets(self):
        D = fsc1_cactus()
        K = geodetic_forcing_set(D, _only_cycle(D))
        self.assertEqual(K.members, (1, 2, 4))
        self.assertTrue(forcing_set_holds(D, K))

        D = fsc2_cactus()
        K = geodetic_forcing_set(D, _only_cycle(D))
        self.assertEqual(K.members, (0, 1, 2, 3))
        self.assertTrue(forcing_set_holds(D, K))
        self.assertFalse(forcing_set_holds(D, VertexSet.empty(D.n)))

    def test_forcing_set_needs_falsely_satisfactory(self):
        D = uc3_cycle()
        with self.assertRaises(ValueError):
            geodetic_forcing_set(D, _only_cycle(D))


class TestCactusSolver(unittest.TestCase):
    def test_small_examples(self):
        # (graph, ohn, ogn)
        cases = [
            (trap_transmitter_cactus(), 2, 2),
            (uc2_cactus(), 3, 3),
            (uc3_cycle(), 3, 3),
            (fsc1_cactus(), 3, 4),
            (fsc2_cactus(), 2, 3),
            (tsc_cactus(), 4, 4),
        ]
        for D, ohn, ogn in cases:
            hull_solution = min_hull_set_cactus(D)
            geo_solution = min_geodetic_set_cactus(D)
            self.assertEqual(hull_solution.size, ohn)
            self.assertEqual(geo_solution.size, ogn)
            self.assertTrue(hull_solution.certified)
            self.assertTrue(geo_solution.certified)
            self.assertEqual(hull_solution.lower_bound, ohn)
            self.assertEqual(geo_solution.lower_bound, ogn)
            self.assertLessEqual(hull_rounds(D, hull_solution.vertex_set), 2)

    def test_fsc2_sets(self):
        D = fsc2_cactus()
        self.assertEqual(min_hull_set_cactus(D).vertex_set.members, (4, 5))
        self.assertEqual(min_geodetic_set_cactus(D).vertex_set.members, (2, 4, 5))
        self.assertEqual(hull_rounds(D, VertexSet.of(6, [4, 5])), 2)

    def test_tsc_needs_only_extremes(self):
        D = tsc_cactus()
        self.assertEqual(min_geodetic_set_cactus(D).vertex_set, ext_set(D))

    def test_class_counts(self):
        counts = min_hull_set_cactus(fsc2_cactus()).class_counts()
        self.assertEqual(counts["fsc2"], 1)
        self.assertEqual(sum(counts.values()), 1)

    def test_degenerate_cycle(self):
        D = generators.directed_cycle(4)
        solution = solve_cactus(D, HULL)
        self.assertTrue(solution.degenerate_single_cycle)
        self.assertEqual(solution.size, 2)
        with self.assertRaises(errors.DegenerateSingleCycleError):
            solve_cactus(D, GEODETIC, allow_degenerate=False)

    def test_preconditions(self):
        with self.assertRaises(errors.NotACactusError):
            min_hull_set_cactus(generators.transitive_tournament(4))
        two_triangles = build_graph(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        with self.assertRaises(errors.DisconnectedError):
            min_geodetic_set_cactus(two_triangles)
        with self.assertRaises(ValueError):
            solve_cactus(uc3_cycle(), "convex")

    def test_tree_solution(self):
        path = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(tree_solution(path).vertex_set.members, (0, 3))
        alternating = build_graph(4, [(0, 1), (2, 1), (2, 3)])
        self.assertTrue(tree_solution(alternating).vertex_set.is_full())
        out_star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        self.assertTrue(tree_solution(out_star, HULL).vertex_set.is_full())
        with self.assertRaises(errors.NotATreeError):
            tree_solution(generators.directed_cycle(3))

    def test_random_trees(self):
        samples = consts.trees.samples
        for seed, D in random_trees(samples, consts.trees.max_n):
            solution = tree_solution(D)
            msg = f"seed {seed}"
            self.assertEqual(solution.vertex_set, ext_set(D), msg=msg)
            self.assertEqual(solution.size, min_geodetic_set(D).optimum, msg=msg)
            self.assertEqual(solution.size, min_hull_set(D).optimum, msg=msg)

    def test_regression_seeds(self):
        for seed in consts.cactus.regression_seeds:
            D = stream_cactus(seed)
            msg = f"seed {seed}"
            hull_solution = min_hull_set_cactus(D)
            geo_solution = min_geodetic_set_cactus(D)
            self.assertEqual(hull_solution.size, min_hull_set(D).optimum, msg=msg)
            self.assertEqual(geo_solution.size, min_geodetic_set(D).optimum, msg=msg)
            self.assertTrue(is_hull_set(D, hull_solution.vertex_set), msg=msg)
            self.assertTrue(is_geodetic_set(D, geo_solution.vertex_set), msg=msg)

    def test_unreached_cycles_fall_back(self):
        D = unreached_uc2_cactus()
        hull_solution = min_hull_set_cactus(D)
        geo_solution = min_geodetic_set_cactus(D)
        self.assertTrue(hull_solution.exact_fallback)
        self.assertEqual(hull_solution.size, min_hull_set(D).optimum)
        self.assertEqual(geo_solution.size, min_geodetic_set(D).optimum)
        self.assertTrue(is_hull_set(D, hull_solution.vertex_set))

    def test_shared_vertex_cycles(self):
        D = shared_vertex_cycles()
        solution = min_hull_set_cactus(D)
        self.assertTrue(solution.exact_fallback)
        self.assertFalse(solution.certified)
        self.assertEqual(solution.lower_bound, 2)
        self.assertEqual(solution.size, 3)
        self.assertEqual(solution.size, min_hull_set(D).optimum)
        self.assertTrue(is_hull_set(D, solution.vertex_set))
        geo_solution = min_geodetic_set_cactus(D)
        self.assertEqual(geo_solution.size, min_geodetic_set(D).optimum)

        config = solver_config()
        config.cactus.exact_fallback = False
        with self.assertRaises(errors.ConstructionFailedError):
            min_hull_set_cactus(D, config=config)

    def test_random_cacti(self):
        samples = consts.cactus.samples
        max_n = consts.cactus.max_n
        min_n = consts.cactus.min_n
        for seed, D in random_cacti(samples, max_n, min_n):
            msg = f"seed {seed}"
            hull_solution = min_hull_set_cactus(D)
            geo_solution = min_geodetic_set_cactus(D)

            self.assertEqual(hull_solution.size, min_hull_set(D).optimum, msg=msg)
            self.assertEqual(geo_solution.size, min_geodetic_set(D).optimum, msg=msg)
            self.assertTrue(is_hull_set(D, hull_solution.vertex_set), msg=msg)
            self.assertTrue(is_geodetic_set(D, geo_solution.vertex_set), msg=msg)
            for solution in (hull_solution, geo_solution):
                self.assertLessEqual(solution.lower_bound, solution.size, msg=msg)
                self.assertTrue(
                    solution.certified
                    or solution.exact_fallback
                    or solution.degenerate_single_cycle,
                    msg=msg,
                )
                if solution.certified:
                    self.assertEqual(solution.lower_bound, solution.size, msg=msg)

            certificates = [K for _, K in hull_solution.certificates]
            for K in certificates:
                self.assertTrue(is_coconvex(D, K), msg=msg)
            self.assertTrue(
                compare_utils.pairwise_disjoint(certificates + [ext_set(D)]),
                msg=msg,
            )
            for _, K in geo_solution.forcing_sets:
                self.assertTrue(forcing_set_holds(D, K), msg=msg)


if __name__ == "__main__":
    unittest.main()
