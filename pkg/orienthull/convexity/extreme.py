"""Extreme-vertex classification."""
import enum
import itertools
from typing import Dict, Sequence, Tuple

from orienthull.graph.digraph import OrientedGraph, UndirectedGraph, induced_subgraph
from orienthull.graph.vertex_set import VertexSet


class ExtremeKind(enum.Enum):
    SOURCE = "source"
    SINK = "sink"
    TRANSITIVE = "transitive"
    NOT_EXTREME = "not_extreme"


def extreme_kind(D: OrientedGraph, v: int) -> ExtremeKind:
    # An isolated vertex is reported as a source
    if D.in_degree(v) == 0:
        return ExtremeKind.SOURCE
    if D.out_degree(v) == 0:
        return ExtremeKind.SINK

    out_v = D.out_masks[v]
    if all(D.out_masks[a] & out_v == out_v for a in D.in_adj[v]):
        return ExtremeKind.TRANSITIVE
    return ExtremeKind.NOT_EXTREME


def extreme_vertices(D: OrientedGraph) -> Dict[int, ExtremeKind]:
    return {v: extreme_kind(D, v) for v in range(D.n)}


def ext_set(D: OrientedGraph) -> VertexSet:
    """ext(D): every vertex that is not NOT_EXTREME."""
    return VertexSet.of(
        D.n,
        (v for v in range(D.n) if extreme_kind(D, v) != ExtremeKind.NOT_EXTREME),
    )


def cycle_orientation_counts(
    D: OrientedGraph, cycle: Sequence[int]
) -> Tuple[int, int, int]:
    """(#sources, #sinks, #transitive) of a cycle taken as its own graph."""
    C, _ = induced_subgraph(D, cycle)
    kinds = [extreme_kind(C, v) for v in range(C.n)]
    return (
        kinds.count(ExtremeKind.SOURCE),
        kinds.count(ExtremeKind.SINK),
        kinds.count(ExtremeKind.TRANSITIVE),
    )


def simplicial_set(G: UndirectedGraph) -> VertexSet:
    """Vertices whose neighbourhood is a clique, isolated ones included."""
    return VertexSet.of(
        G.n,
        (
            v for v in range(G.n)
            if all(G.has_edge(a, b) for a, b in itertools.combinations(G.adj[v], 2))
        ),
    )
