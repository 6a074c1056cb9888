import unittest

from orienthull import errors
from orienthull.config import solver_config
from orienthull.convexity.interval import is_geodetic_set
from orienthull.convexity.solvers import min_geodetic_set
from orienthull.graph.structure import (
    is_bipartite_underlying,
    is_cobipartite_underlying,
    is_dag,
    is_split_underlying,
)
from orienthull.graph.vertex_set import VertexSet
from orienthull.reductions.decoding import decode_cover, normalize
from orienthull.reductions.gadgets import (
    BIPARTITE,
    COBIPARTITE,
    KINDS,
    SPLIT,
    RoleKind,
    build_gadget,
    core_gadget,
    forward_geodetic_set,
    partition,
    to_bipartite_dag,
    to_cobipartite,
    to_split,
)
from orienthull.reductions.set_cover import (
    enumerate_set_cover_instances,
    make_instance,
    min_set_cover,
)
from orienthull.reductions.verification import verify_equivalence
from tests.config import consts
from tests.data_utils import figure_instance


class TestSetCover(unittest.TestCase):
    def test_min_set_cover(self):
        self.assertEqual(min_set_cover(figure_instance()), (2, (0, 2)))

    def test_invalid(self):
        with self.assertRaises(errors.InvalidInstanceError):
            make_instance(3, [{1, 2}], 1)
        with self.assertRaises(errors.InvalidInstanceError):
            make_instance(2, [{1, 3}], 1)
        with self.assertRaises(errors.InvalidInstanceError):
            make_instance(2, [], 1)

    def test_enumeration(self):
        instances = list(enumerate_set_cover_instances(2, 2))
        self.assertEqual(len(instances), 4)
        for instance in instances:
            self.assertEqual(instance.budget, instance.m)
            self.assertTrue(instance.covers(range(instance.m)))


class TestGadgets(unittest.TestCase):
    def test_core(self):
        D, mapping = core_gadget(figure_instance())
        self.assertEqual(D.n, 8)
        self.assertEqual(D.out_adj[mapping.set_vertex(0)], (3, 4, 5, 6))
        self.assertEqual(mapping.element_vertex(5), 7)
        self.assertEqual(str(mapping.role(7)), "element:5")
        self.assertEqual(str(mapping.role(0)), "set:1")

    def test_bipartite(self):
        D, mapping, threshold = to_bipartite_dag(figure_instance())
        self.assertEqual((D.n, D.m), (11, 21))
        self.assertEqual(threshold, 5)
        self.assertTrue(is_dag(D))
        self.assertTrue(is_bipartite_underlying(D))
        self.assertEqual(mapping.apex, {"u": 8, "v": 9, "w": 10})
        self.assertEqual(str(mapping.role(9)), "apex:v")
        self.assertEqual(min_geodetic_set(D).optimum, 5)

    def test_split(self):
        D, mapping, threshold = to_split(figure_instance())
        self.assertEqual(D.n, 12)
        self.assertEqual(threshold, 5)
        stable, clique = partition(mapping)
        self.assertTrue(is_split_underlying(D, stable, clique))
        self.assertFalse(is_dag(D))
        # f_1 -> u_1 -> x -> f_1
        x = mapping.apex["x"]
        self.assertTrue(D.has_arc(0, mapping.element_vertex(1)))
        self.assertTrue(D.has_arc(mapping.element_vertex(1), x))
        self.assertTrue(D.has_arc(x, 0))

    def test_cobipartite(self):
        D, mapping, _ = to_cobipartite(figure_instance())
        first, second = partition(mapping)
        self.assertTrue(is_dag(D))
        self.assertTrue(is_cobipartite_underlying(D, first, second))

    def test_sizes_are_linear(self):
        instance = figure_instance()
        size = instance.universe_size + instance.m
        for kind in KINDS:
            D, mapping, _ = build_gadget(kind, instance)
            self.assertLessEqual(D.n, size + 4)
            self.assertEqual(len(mapping.roles), D.n)

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            build_gadget("planar", figure_instance())

    def test_forward_sets(self):
        instance = figure_instance()
        for kind in KINDS:
            D, _, threshold = build_gadget(kind, instance)
            S = forward_geodetic_set(kind, instance, (0, 2))
            self.assertEqual(len(S), threshold, msg=kind)
            self.assertTrue(is_geodetic_set(D, S), msg=kind)


class TestDecoding(unittest.TestCase):
    def test_decode_sets(self):
        D, mapping, _ = to_bipartite_dag(figure_instance())
        S = VertexSet.of(D.n, [0, 2, 8, 9, 10])
        self.assertEqual(decode_cover(D, mapping, S, figure_instance()), (0, 2))

    def test_decode_swaps_elements(self):
        D, mapping, _ = to_bipartite_dag(figure_instance())
        u5 = mapping.element_vertex(5)
        S = VertexSet.of(D.n, [0, u5, 8, 9, 10])
        self.assertEqual(normalize(D, mapping, S).members, (0, 2, 8, 9, 10))
        self.assertEqual(decode_cover(D, mapping, S, figure_instance()), (0, 2))

    def test_decode_split_drops_x(self):
        instance = figure_instance()
        D, mapping, _ = to_split(instance)
        S = forward_geodetic_set(SPLIT, instance, (0, 2)).add(mapping.apex["x"])
        self.assertEqual(decode_cover(D, mapping, S, instance), (0, 2))

    def test_decode_minimum_witnesses(self):
        instance = figure_instance()
        for kind in (BIPARTITE, SPLIT, COBIPARTITE):
            D, mapping, _ = build_gadget(kind, instance)
            witness = min_geodetic_set(D).witness
            cover = decode_cover(D, mapping, witness, instance)
            self.assertEqual(len(cover), 2, msg=kind)
            for v in mapping.forced():
                self.assertEqual(mapping.role(v).kind, RoleKind.APEX)

    def test_not_geodetic(self):
        D, mapping, _ = to_bipartite_dag(figure_instance())
        with self.assertRaises(errors.NotGeodeticError):
            decode_cover(D, mapping, VertexSet.of(D.n, [8, 9, 10]))


class TestEquivalence(unittest.TestCase):
    def test_figure(self):
        report = verify_equivalence(figure_instance())
        self.assertTrue(report.holds)
        self.assertEqual(report.summary(), "optcover: 2, ogn: 5/5/5")
        self.assertEqual(report.cover, (0, 2))

    def test_whole_universe(self):
        report = verify_equivalence(make_instance(3, [{1, 2, 3}], 1))
        self.assertEqual(report.optcover, 1)
        self.assertEqual(set(report.ogn.values()), {4})

    def test_singletons(self):
        report = verify_equivalence(make_instance(3, [{1}, {2}, {3}], 3))
        self.assertEqual(report.optcover, 3)
        self.assertEqual(set(report.ogn.values()), {6})

    def test_too_large(self):
        instance = make_instance(6, [range(1, 7)], 1)
        with self.assertRaises(errors.InstanceTooLargeError):
            verify_equivalence(instance)
        config = solver_config()
        config.reductions.max_universe = 6
        self.assertTrue(verify_equivalence(instance, config).holds)

    def test_exhaustive(self):
        max_n = consts.reductions.max_n
        max_m = consts.reductions.max_m
        count = 0
        for instance in enumerate_set_cover_instances(max_n, max_m):
            report = verify_equivalence(instance)
            self.assertTrue(report.holds, msg=f"{instance}: {report.summary()}")
            count += 1
        self.assertGreater(count, 0)


if __name__ == "__main__":
    unittest.main()
