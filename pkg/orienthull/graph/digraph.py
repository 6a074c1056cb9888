"""Oriented and undirected graph types."""
import dataclasses
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx

from orienthull import errors
from orienthull.graph.vertex_set import VertexSet


Arc = Tuple[int, int]
Edge = Tuple[int, int]


@dataclasses.dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a simple graph on the vertices 0..n-1."""

    n: int

    # Arcs (u, v), sorted lexicographically
    arcs: Tuple[Arc, ...]

    # Sorted out- and in-neighbours of every vertex
    out_adj: Tuple[Tuple[int, ...], ...]
    in_adj: Tuple[Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def _arc_set(self) -> FrozenSet[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        return tuple(_to_mask(a) for a in self.out_adj)

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        return tuple(_to_mask(a) for a in self.in_adj)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    def adjacent(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) or self.has_arc(v, u)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.arcs)
        return g


@dataclasses.dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph on the vertices 0..n-1."""

    n: int

    # Edges (u, v) with u < v, sorted lexicographically
    edges: Tuple[Edge, ...]

    # Sorted neighbours of every vertex
    adj: Tuple[Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_vertex(n: int, v: int):
    if not 0 <= v < n:
        raise errors.VertexOutOfRangeError(
            f"Vertex {v} outside 0..{n - 1}"
        )


def build_graph(n: int, arcs: Iterable[Arc]) -> OrientedGraph:
    """Validates an arc list and builds an OrientedGraph.

    Args:
        n:
            Number of vertices
        arcs:
            Ordered pairs (u, v). Repeats are rejected rather than merged
    Returns:
        The graph, with arcs and adjacency lists sorted
    """
    if n < 0:
        raise errors.BadParameterError(f"Vertex count {n} is negative")

    seen = set()
    for u, v in ((int(a), int(b)) for a, b in arcs):
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise errors.LoopError(f"Loop at vertex {u}")
        if (u, v) in seen:
            raise errors.DuplicateArcError(f"Arc ({u}, {v}) given twice")
        if (v, u) in seen:
            raise errors.SymmetricArcPairError(
                f"Both ({v}, {u}) and ({u}, {v}) given"
            )
        seen.add((u, v))

    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    sorted_arcs = tuple(sorted(seen))
    for u, v in sorted_arcs:
        out_adj[u].append(v)
        in_adj[v].append(u)

    return OrientedGraph(
        n=n,
        arcs=sorted_arcs,
        out_adj=tuple(tuple(a) for a in out_adj),
        in_adj=tuple(tuple(sorted(a)) for a in in_adj),
    )


def build_undirected(n: int, edges: Iterable[Edge]) -> UndirectedGraph:
    if n < 0:
        raise errors.BadParameterError(f"Vertex count {n} is negative")

    seen = set()
    for u, v in ((int(a), int(b)) for a, b in edges):
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise errors.LoopError(f"Loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise errors.DuplicateArcError(f"Edge {{{u}, {v}}} given twice")
        seen.add(e)

    adj = [[] for _ in range(n)]
    sorted_edges = tuple(sorted(seen))
    for u, v in sorted_edges:
        adj[u].append(v)
        adj[v].append(u)

    return UndirectedGraph(
        n=n,
        edges=sorted_edges,
        adj=tuple(tuple(sorted(a)) for a in adj),
    )


def underlying(D: OrientedGraph) -> UndirectedGraph:
    return build_undirected(D.n, D.arcs)


def induced_subgraph(
    D: OrientedGraph, vertices: Iterable[int]
) -> Tuple[OrientedGraph, Tuple[int, ...]]:
    """Induced subgraph D[S], relabelled to 0..|S|-1 in increasing order.

    Returns:
        The subgraph and the original index of each of its vertices
    """
    old = tuple(sorted(set(vertices)))
    new: Dict[int, int] = {v: i for i, v in enumerate(old)}
    arcs = [
        (new[u], new[v]) for u, v in D.arcs if u in new and v in new
    ]
    return build_graph(len(old), arcs), old

