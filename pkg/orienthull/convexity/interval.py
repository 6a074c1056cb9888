"""Interval function, convex hull and convexity tests.

All functions accept either an OrientedGraph or an UndirectedGraph; the
geodesics are directed in the first case and symmetric in the second.
"""
import functools
from typing import Tuple, Union

from orienthull.graph.digraph import OrientedGraph, UndirectedGraph
from orienthull.graph.distances import (
    DistanceMatrix,
    GeodesicTable,
    all_pairs_distances,
    geodesic_table,
)
from orienthull.graph.vertex_set import VertexSet, iter_bits


Graph = Union[OrientedGraph, UndirectedGraph]


@functools.lru_cache(maxsize=128)
def distances(G: Graph) -> DistanceMatrix:
    return all_pairs_distances(G)


@functools.lru_cache(maxsize=128)
def geodesics(G: Graph) -> GeodesicTable:
    return geodesic_table(distances(G))


def interval_mask(table: GeodesicTable, mask: int) -> int:
    members = list(iter_bits(mask))
    if len(members) < 2:
        return mask

    out = mask
    for u in members:
        row = table.masks[u]
        for v in members:
            out |= row[v]
    return out


def hull_mask(table: GeodesicTable, mask: int) -> Tuple[int, int]:
    """Least convex superset of mask.

    Returns:
        The hull and the number of interval applications that grew the set
    """
    rounds = 0
    while True:
        grown = interval_mask(table, mask)
        if grown == mask:
            return mask, rounds
        mask = grown
        rounds += 1


def _check(G: Graph, S: VertexSet):
    if S.n != G.n:
        raise ValueError(f"Vertex set over {S.n} vertices, graph has {G.n}")


def interval(G: Graph, S: VertexSet) -> VertexSet:
    _check(G, S)
    return VertexSet(G.n, interval_mask(geodesics(G), S.mask))


def hull(G: Graph, S: VertexSet) -> VertexSet:
    _check(G, S)
    mask, _ = hull_mask(geodesics(G), S.mask)
    return VertexSet(G.n, mask)


def hull_rounds(G: Graph, S: VertexSet) -> int:
    """Smallest k with I^k(S) = hull(S)."""
    _check(G, S)
    _, rounds = hull_mask(geodesics(G), S.mask)
    return rounds


def is_convex(G: Graph, S: VertexSet) -> bool:
    return interval(G, S) == S


def is_coconvex(G: Graph, S: VertexSet) -> bool:
    return is_convex(G, S.complement())


def is_hull_set(G: Graph, S: VertexSet) -> bool:
    return hull(G, S).is_full()


def is_geodetic_set(G: Graph, S: VertexSet) -> bool:
    return interval(G, S).is_full()
