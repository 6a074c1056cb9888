import unittest

from orienthull import errors
from orienthull.graph.digraph import (
    build_graph,
    build_undirected,
    induced_subgraph,
    underlying,
)
from orienthull.graph.structure import (
    is_bipartite_underlying,
    is_cactus,
    is_clique,
    is_connected,
    is_dag,
    is_split_underlying,
    is_stable,
    is_tournament,
    is_tree_underlying,
    structural_queries,
)
from orienthull.graph.vertex_set import VertexSet
from orienthull.transforms import generators
from tests.data_utils import directed_c3, directed_c4, split_triangle


class TestVertexSet(unittest.TestCase):
    def test_set_algebra(self):
        a = VertexSet.of(6, [0, 2, 4])
        b = VertexSet.of(6, [2, 3])

        self.assertEqual((a | b).members, (0, 2, 3, 4))
        self.assertEqual((a & b).members, (2,))
        self.assertEqual((a - b).members, (0, 4))
        self.assertEqual(a.complement().members, (1, 3, 5))
        self.assertTrue(VertexSet.of(6, [0, 4]) <= a)
        self.assertFalse(b <= a)
        self.assertTrue(a.isdisjoint(VertexSet.of(6, [1, 5])))

    def test_add_remove(self):
        s = VertexSet.empty(4).add(3).add(1)
        self.assertEqual(s.members, (1, 3))
        self.assertEqual(s.remove(3).members, (1,))
        self.assertEqual(len(s), 2)
        self.assertIn(1, s)
        self.assertNotIn(0, s)
        self.assertTrue(VertexSet.full(4).is_full())

    def test_to_string(self):
        self.assertEqual(VertexSet.of(5, [4, 0, 2]).to_string(), "0,2,4")
        self.assertEqual(VertexSet.empty(3).to_string(), "")

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            VertexSet.of(3, [3])


class TestBuildGraph(unittest.TestCase):
    def test_sorted_adjacency(self):
        D = build_graph(4, [(2, 0), (0, 1), (3, 0)])
        self.assertEqual(D.arcs, ((0, 1), (2, 0), (3, 0)))
        self.assertEqual(D.in_adj[0], (2, 3))
        self.assertEqual(D.out_adj[0], (1,))
        self.assertEqual(D.m, 3)
        self.assertTrue(D.has_arc(2, 0))
        self.assertFalse(D.has_arc(0, 2))
        self.assertTrue(D.adjacent(0, 2))

    def test_loop(self):
        with self.assertRaises(errors.LoopError):
            build_graph(2, [(1, 1)])

    def test_duplicate(self):
        with self.assertRaises(errors.DuplicateArcError):
            build_graph(2, [(0, 1), (0, 1)])

    def test_symmetric_pair(self):
        with self.assertRaises(errors.SymmetricArcPairError):
            build_graph(2, [(0, 1), (1, 0)])

    def test_out_of_range(self):
        with self.assertRaises(errors.VertexOutOfRangeError):
            build_graph(2, [(0, 2)])

    def test_undirected_duplicate(self):
        with self.assertRaises(errors.DuplicateArcError):
            build_undirected(3, [(0, 1), (1, 0)])

    def test_underlying(self):
        G = underlying(directed_c3())
        self.assertEqual(G.edges, ((0, 1), (0, 2), (1, 2)))

    def test_induced_subgraph(self):
        sub, old = induced_subgraph(directed_c4(), [3, 1, 2])
        self.assertEqual(old, (1, 2, 3))
        self.assertEqual(sub.arcs, ((0, 1), (1, 2)))


class TestStructure(unittest.TestCase):
    def test_tournaments(self):
        self.assertTrue(is_tournament(generators.transitive_tournament(5)))
        self.assertTrue(is_tournament(directed_c3()))
        self.assertFalse(is_tournament(directed_c4()))

    def test_dag(self):
        self.assertTrue(is_dag(generators.transitive_tournament(4)))
        self.assertFalse(is_dag(directed_c3()))

    def test_connectivity(self):
        self.assertTrue(is_connected(directed_c4()))
        self.assertFalse(is_connected(build_graph(3, [(0, 1)])))

    def test_trees(self):
        self.assertTrue(is_tree_underlying(build_graph(3, [(0, 1), (2, 1)])))
        self.assertFalse(is_tree_underlying(directed_c3()))

    def test_bipartite(self):
        self.assertTrue(is_bipartite_underlying(directed_c4()))
        self.assertFalse(is_bipartite_underlying(directed_c3()))

    def test_cactus(self):
        self.assertTrue(is_cactus(generators.directed_cycle(5)))
        # Two triangles sharing a vertex
        bowtie = build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        self.assertTrue(is_cactus(bowtie))
        self.assertFalse(is_cactus(generators.transitive_tournament(4)))

    def test_split(self):
        D, stable, clique = split_triangle()
        self.assertTrue(is_split_underlying(D, stable, clique))
        self.assertTrue(is_clique(D, clique))
        self.assertTrue(is_stable(D, stable))
        self.assertFalse(is_split_underlying(D, clique, stable))
        self.assertFalse(is_split_underlying(D, [3], clique))

    def test_structural_queries(self):
        flags = structural_queries(generators.transitive_tournament(3))
        self.assertTrue(flags["is_tournament"])
        self.assertTrue(flags["is_dag"])
        self.assertTrue(flags["is_cactus"])
        self.assertFalse(flags["is_tree"])


if __name__ == "__main__":
    unittest.main()
