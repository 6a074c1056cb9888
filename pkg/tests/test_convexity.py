import itertools
import unittest

import numpy as np

from orienthull.convexity.extreme import (
    ExtremeKind,
    cycle_orientation_counts,
    ext_set,
    extreme_kind,
    extreme_vertices,
    simplicial_set,
)
from orienthull.convexity.interval import (
    hull,
    hull_rounds,
    interval,
    is_coconvex,
    is_convex,
    is_geodetic_set,
    is_hull_set,
)
from orienthull.convexity.solvers import min_geodetic_set, min_hull_set
from orienthull.graph.digraph import build_graph
from orienthull.graph.vertex_set import VertexSet
from orienthull.transforms import generators
from orienthull.transforms.random_graphs import random_orientation
import tests.compare_utils as compare_utils
from tests.config import consts
from tests.data_utils import directed_c3, directed_c4, random_oriented_graphs


def _random_subset(rng, n):
    return VertexSet.of(n, np.flatnonzero(rng.random(n) < 0.3).tolist())


class TestInterval(unittest.TestCase):
    def test_directed_c3(self):
        D = directed_c3()
        S = VertexSet.of(3, [0, 1])
        self.assertTrue(interval(D, S).is_full())
        self.assertTrue(is_geodetic_set(D, S))
        self.assertEqual(hull_rounds(D, S), 1)

    def test_small_sets_are_fixed(self):
        D = directed_c4()
        self.assertEqual(interval(D, VertexSet.empty(4)), VertexSet.empty(4))
        self.assertEqual(interval(D, VertexSet.of(4, [2])).members, (2,))

    def test_directed_c4_pair(self):
        D = directed_c4()
        S = VertexSet.of(4, [0, 2])
        self.assertTrue(interval(D, S).is_full())
        S = VertexSet.of(4, [0, 1])
        self.assertTrue(interval(D, S).is_full())

    def test_hull_needs_two_rounds(self):
        # Directed C4 entered at 0 from the source 4
        D = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)])
        S = VertexSet.of(5, [4, 1])
        self.assertEqual(interval(D, S).members, (0, 1, 4))
        self.assertTrue(is_hull_set(D, S))
        self.assertEqual(hull_rounds(D, S), 2)

    def test_convexity(self):
        D = generators.transitive_tournament(4)
        self.assertTrue(is_convex(D, VertexSet.of(4, [0, 1])))
        self.assertTrue(is_convex(D, VertexSet.of(4, [1])))
        # Removing an extreme vertex leaves a convex set
        self.assertTrue(is_coconvex(D, VertexSet.of(4, [0])))
        self.assertFalse(is_coconvex(directed_c3(), VertexSet.of(3, [0])))

    def test_matches_networkx(self):
        rng = np.random.default_rng(consts.seed)
        for seed, D in random_oriented_graphs(60, consts.brute_force_max_n):
            S = _random_subset(rng, D.n)
            self.assertEqual(
                interval(D, S), compare_utils.brute_interval(D, S), msg=f"seed {seed}"
            )
            self.assertEqual(
                hull(D, S), compare_utils.brute_hull(D, S), msg=f"seed {seed}"
            )

    def test_undirected_matches_networkx(self):
        G = generators.cycle_graph(6)
        for combo in itertools.combinations(range(6), 2):
            S = VertexSet.of(6, combo)
            self.assertEqual(interval(G, S), compare_utils.brute_interval(G, S))


class TestExtreme(unittest.TestCase):
    def test_transitive_triangle(self):
        D = generators.transitive_tournament(3)
        self.assertEqual(extreme_kind(D, 0), ExtremeKind.SOURCE)
        self.assertEqual(extreme_kind(D, 1), ExtremeKind.TRANSITIVE)
        self.assertEqual(extreme_kind(D, 2), ExtremeKind.SINK)
        self.assertTrue(ext_set(D).is_full())

    def test_directed_cycle_has_none(self):
        self.assertEqual(len(ext_set(directed_c3())), 0)
        self.assertEqual(
            set(extreme_vertices(directed_c4()).values()),
            {ExtremeKind.NOT_EXTREME},
        )

    def test_isolated_vertex_is_source(self):
        D = build_graph(3, [(0, 1)])
        self.assertEqual(extreme_kind(D, 2), ExtremeKind.SOURCE)

    def test_cycle_sources_equal_sinks(self):
        for seed in range(consts.seed, consts.seed + 100):
            k = 3 + seed % 8
            D = random_orientation(generators.cycle_graph(k), seed=seed)
            sources, sinks, _ = cycle_orientation_counts(D, range(k))
            self.assertEqual(sources, sinks, msg=f"seed {seed}")

    def test_simplicial(self):
        self.assertEqual(simplicial_set(generators.path_graph(4)).members, (0, 3))
        self.assertEqual(len(simplicial_set(generators.cycle_graph(5))), 0)
        self.assertTrue(simplicial_set(generators.star_graph(1)).is_full())


class TestConvexityAlgebra(unittest.TestCase):
    def test_properties(self):
        rng = np.random.default_rng(consts.seed)
        samples = consts.algebra.samples
        max_n = consts.algebra.max_n
        for seed, D in random_oriented_graphs(samples, max_n, min_n=3):
            msg = f"seed {seed}"
            S = _random_subset(rng, D.n)
            T = S | _random_subset(rng, D.n)

            # Extensive and monotone
            self.assertTrue(S <= interval(D, S), msg=msg)
            self.assertTrue(interval(D, S) <= interval(D, T), msg=msg)
            self.assertTrue(hull(D, S) <= hull(D, T), msg=msg)

            # The hull is idempotent and convex
            H = hull(D, S)
            self.assertEqual(hull(D, H), H, msg=msg)
            self.assertTrue(is_convex(D, H), msg=msg)

            # Every extreme vertex is forced
            for x in ext_set(D):
                self.assertTrue(
                    is_convex(D, VertexSet.full(D.n).remove(x)), msg=msg
                )

            if D.n <= consts.algebra.exact_max_n:
                ohn = min_hull_set(D).optimum
                ogn = min_geodetic_set(D).optimum
                self.assertLessEqual(len(ext_set(D)), ohn, msg=msg)
                self.assertLessEqual(ohn, ogn, msg=msg)


if __name__ == "__main__":
    unittest.main()
