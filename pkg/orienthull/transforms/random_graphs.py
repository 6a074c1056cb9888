"""Seeded random instance generators.

Every generator takes a seed (or a numpy Generator) and is deterministic
for it.
"""
from typing import List, Optional, Tuple

import numpy as np

from orienthull import errors
from orienthull.config import solver_config
from orienthull.graph.digraph import (
    OrientedGraph,
    UndirectedGraph,
    build_graph,
    build_undirected,
)
from orienthull.graph.vertex_set import VertexSet
from orienthull.utils.seed import make_rng


def _check_probability(p: float):
    if not 0. <= p <= 1.:
        raise errors.BadParameterError(f"Probability {p} outside [0, 1]")


def _check_count(name: str, value: int, least: int):
    if value < least:
        raise errors.BadParameterError(f"{name} must be at least {least}, got {value}")


def _orient(rng: np.random.Generator, edges: List[Tuple[int, int]]):
    flips = rng.random(len(edges)) < 0.5
    return [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]


def random_graph(n: int, p: Optional[float] = None, seed=None, config=None) -> UndirectedGraph:
    """G(n, p) on the vertices 0..n-1."""
    config = config if config is not None else solver_config()
    p = p if p is not None else config.random.edge_probability
    _check_count("n", n, 0)
    _check_probability(p)
    rng = make_rng(seed)

    keep = rng.random((n, n)) < p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if keep[u, v]]
    return build_undirected(n, edges)


def random_orientation(G: UndirectedGraph, seed=None) -> OrientedGraph:
    rng = make_rng(seed)
    return build_graph(G.n, _orient(rng, list(G.edges)))


def random_oriented_graph(n: int, p: Optional[float] = None, seed=None, config=None) -> OrientedGraph:
    rng = make_rng(seed)
    return random_orientation(random_graph(n, p, rng, config), rng)


def random_tournament(n: int, seed=None) -> OrientedGraph:
    _check_count("n", n, 1)
    rng = make_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, _orient(rng, pairs))


def random_oriented_tree(n: int, seed=None) -> OrientedGraph:
    """Random recursive tree: vertex i hangs below a uniform earlier vertex."""
    _check_count("n", n, 1)
    rng = make_rng(seed)
    edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
    return build_graph(n, _orient(rng, edges))


def random_cactus(n: int, seed=None, config=None) -> OrientedGraph:
    """Grows a tree of blocks, then orients it.

    Each new block hangs off a uniformly chosen existing vertex and is a
    cycle with probability config.random.cycle_probability (length uniform
    in the configured range, shortened to fit n) or else a single edge.
    Half of the cycles are oriented as directed cycles, the rest edge by
    edge at random.
    """
    config = config if config is not None else solver_config()
    _check_count("n", n, 1)
    rng = make_rng(seed)
    lo, hi = config.random.min_cycle_length, config.random.max_cycle_length

    arcs = []
    size = 1
    while size < n:
        anchor = int(rng.integers(0, size))
        room = n - size
        if rng.random() < config.random.cycle_probability and room >= lo - 1:
            length = int(rng.integers(lo, min(hi, room + 1) + 1))
            cycle = [anchor] + list(range(size, size + length - 1))
            size += length - 1
            edges = [(cycle[i], cycle[(i + 1) % length]) for i in range(length)]
            if rng.random() < 0.5:
                if rng.random() < 0.5:
                    edges = [(v, u) for u, v in edges]
                arcs.extend(edges)
            else:
                arcs.extend(_orient(rng, edges))
        else:
            edges = [(anchor, size)]
            size += 1
            arcs.extend(_orient(rng, edges))

    return build_graph(n, arcs)


def random_bipartite(
    n1: int, n2: int, p: Optional[float] = None, seed=None, config=None
) -> OrientedGraph:
    """Sides 0..n1-1 and n1..n1+n2-1, cross pairs kept with probability p."""
    config = config if config is not None else solver_config()
    p = p if p is not None else config.random.edge_probability
    _check_count("n1", n1, 0)
    _check_count("n2", n2, 0)
    _check_probability(p)
    rng = make_rng(seed)

    keep = rng.random((n1, n2)) < p
    edges = [(u, n1 + v) for u in range(n1) for v in range(n2) if keep[u, v]]
    return build_graph(n1 + n2, _orient(rng, edges))


def random_split(
    ns: int, nc: int, p: Optional[float] = None, seed=None, config=None
) -> Tuple[OrientedGraph, VertexSet, VertexSet]:
    """Split graph with stable side 0..ns-1 and clique side ns..ns+nc-1.

    Clique vertices left without a stable neighbour get one, so the stable
    side is maximal.

    Returns:
        The graph, the stable side and the clique side
    """
    config = config if config is not None else solver_config()
    p = p if p is not None else config.random.edge_probability
    _check_count("ns", ns, 1)
    _check_count("nc", nc, 1)
    _check_probability(p)
    rng = make_rng(seed)

    n = ns + nc
    edges = [(u, v) for u in range(ns, n) for v in range(u + 1, n)]
    keep = rng.random((ns, nc)) < p
    for c in range(nc):
        if not keep[:, c].any():
            keep[int(rng.integers(0, ns)), c] = True
    edges.extend((s, ns + c) for s in range(ns) for c in range(nc) if keep[s, c])

    D = build_graph(n, _orient(rng, edges))
    return D, VertexSet.of(n, range(ns)), VertexSet.of(n, range(ns, n))
