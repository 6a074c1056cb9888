"""Undirected counterparts of the interval machinery and exact solvers.

Used as the oracle side of the G_C4 comparisons: simplicial vertices play
the part extreme vertices play for oriented graphs.
"""
import networkx as nx

from orienthull import errors
from orienthull.config import solver_config
from orienthull.convexity.extreme import simplicial_set
from orienthull.convexity.interval import geodesics, hull, interval
from orienthull.convexity.solvers import (
    GEODETIC,
    HULL,
    SolveResult,
    _search,
    _verify,
)
from orienthull.graph.digraph import UndirectedGraph
from orienthull.graph.vertex_set import VertexSet


def undirected_interval(G: UndirectedGraph, S: VertexSet) -> VertexSet:
    return interval(G, S)


def undirected_hull(G: UndirectedGraph, S: VertexSet) -> VertexSet:
    return hull(G, S)


def simplicial_vertices(G: UndirectedGraph) -> VertexSet:
    return simplicial_set(G)


def _undirected_search(G: UndirectedGraph, objective: str, config) -> SolveResult:
    config = config if config is not None else solver_config()
    if G.n > 0 and not nx.is_connected(G.to_networkx()):
        raise errors.DisconnectedError("Undirected solvers need a connected graph")

    result = _search(geodesics(G), simplicial_set(G), objective, config)
    _verify(G, result, objective, config)
    return result


def undirected_min_hull_set(G: UndirectedGraph, config=None) -> SolveResult:
    return _undirected_search(G, HULL, config)


def undirected_min_geodetic_set(G: UndirectedGraph, config=None) -> SolveResult:
    return _undirected_search(G, GEODETIC, config)
