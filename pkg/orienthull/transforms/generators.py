"""Named families of oriented and undirected graphs."""
from typing import List

import networkx as nx

from orienthull import errors
from orienthull.graph.digraph import (
    OrientedGraph,
    UndirectedGraph,
    build_graph,
    build_undirected,
)
from orienthull.transforms.products import lex_product


def _require(cond: bool, msg: str):
    if not cond:
        raise errors.BadParameterError(msg)


def transitive_tournament(k: int) -> OrientedGraph:
    _require(k >= 1, f"Transitive tournament needs k >= 1, got {k}")
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def directed_cycle(k: int) -> OrientedGraph:
    _require(k >= 3, f"Directed cycle needs k >= 3, got {k}")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def tight_example(k: int) -> OrientedGraph:
    """K_k o C3: 3k vertices, no extreme vertex, hull number 2k.

    Copy i of the triangle occupies vertices 3i, 3i + 1, 3i + 2.
    """
    _require(k >= 1, f"Tight example needs k >= 1, got {k}")
    return lex_product(transitive_tournament(k), directed_cycle(3))


def path_graph(k: int) -> UndirectedGraph:
    _require(k >= 1, f"Path needs k >= 1 vertices, got {k}")
    return build_undirected(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(k: int) -> UndirectedGraph:
    """Centre 0 joined to the leaves 1..k."""
    _require(k >= 1, f"Star needs k >= 1 leaves, got {k}")
    return build_undirected(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle_graph(k: int) -> UndirectedGraph:
    _require(k >= 3, f"Cycle needs k >= 3, got {k}")
    return build_undirected(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> UndirectedGraph:
    """K_{a,b} with sides 0..a-1 and a..a+b-1."""
    _require(a >= 1 and b >= 1, f"K_{{{a},{b}}} needs both sides nonempty")
    return build_undirected(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


def hypercube_graph(k: int) -> UndirectedGraph:
    """Q_k; vertex i is adjacent to i ^ (1 << j)."""
    _require(k >= 1, f"Hypercube needs k >= 1, got {k}")
    return build_undirected(
        1 << k,
        [(i, i ^ (1 << j)) for i in range(1 << k) for j in range(k) if i < i ^ (1 << j)],
    )


def all_trees(n: int) -> List[UndirectedGraph]:
    """Every free tree on n vertices, one per isomorphism class."""
    _require(n >= 1, f"Trees need n >= 1, got {n}")
    if n == 1:
        return [build_undirected(1, [])]
    return [build_undirected(n, t.edges()) for t in nx.nonisomorphic_trees(n)]
