"""G_C4: every edge {v_i, v_j} of an undirected graph becomes a directed C4.

The cycle v_i -> v_{i,j} -> v_j -> v_{j,i} -> v_i runs through two new
subdivision vertices. Base vertices keep their indices; the subdivision
vertices of the e-th edge (i, j), i < j, in sorted edge order are
v_{i,j} = n + 2e and v_{j,i} = n + 2e + 1.
"""
import dataclasses
import itertools
import logging
from typing import Dict, List, Tuple

from orienthull import errors
from orienthull.convexity.interval import is_hull_set
from orienthull.graph.digraph import OrientedGraph, UndirectedGraph, build_graph
from orienthull.graph.vertex_set import VertexSet


@dataclasses.dataclass(frozen=True)
class C4Mapping:
    # Vertex count of the original graph
    base_n: int

    # (i, j) -> index of v_{i,j}, for both orders of every edge
    subdivision: Dict[Tuple[int, int], int]

    # For every vertex of G_C4: (i,) for base vertex v_i, (i, j) for v_{i,j}
    origin: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.origin)

    def base_vertex(self, i: int) -> int:
        if not 0 <= i < self.base_n:
            raise ValueError(f"No base vertex {i}")
        return i

    def is_subdivision(self, v: int) -> bool:
        return len(self.origin[v]) == 2


def orient_c4(G: UndirectedGraph) -> Tuple[OrientedGraph, C4Mapping]:
    n = G.n
    subdivision = {}
    origin: List[Tuple[int, ...]] = [(i,) for i in range(n)]
    arcs = []
    for e, (i, j) in enumerate(G.edges):
        v_ij, v_ji = n + 2 * e, n + 2 * e + 1
        subdivision[(i, j)] = v_ij
        subdivision[(j, i)] = v_ji
        origin.extend([(i, j), (j, i)])
        arcs.extend([(i, v_ij), (v_ij, j), (j, v_ji), (v_ji, i)])

    D = build_graph(n + 2 * G.m, arcs)
    mapping = C4Mapping(base_n=n, subdivision=subdivision, origin=tuple(origin))
    return D, mapping


def lift_hull_set(mapping: C4Mapping, S: VertexSet) -> VertexSet:
    """A vertex set of G as the same base vertices of G_C4."""
    if S.n != mapping.base_n:
        raise ValueError(f"Vertex set over {S.n} vertices, graph has {mapping.base_n}")
    return VertexSet(mapping.n, S.mask)


def _replacements(
    mapping: C4Mapping, S: VertexSet, s: int
) -> List[VertexSet]:
    """Candidate sets with subdivision vertex s swapped for base vertices.

    Single swaps come first (v_j before v_i for s = v_{i,j}), then every
    pair swap of s together with another subdivision vertex of S.
    """
    i, j = mapping.origin[s]
    out = [S.remove(s).add(j), S.remove(s).add(i)]
    for t in S:
        if t == s or not mapping.is_subdivision(t):
            continue
        k, l = mapping.origin[t]
        for a, b in itertools.product((i, j), (k, l)):
            out.append(S.remove(s).remove(t).add(a).add(b))
    return out


def project_hull_set(
    G: UndirectedGraph, D: OrientedGraph, mapping: C4Mapping, S: VertexSet
) -> VertexSet:
    """Hull set of G from a hull set of G_C4 that may use subdivisions.

    Subdivision vertices are swapped for endpoints of their edges one at a
    time, keeping a hull set of G_C4 after every swap. The result lies on
    base vertices, is no larger than S and is checked to be a hull set of G.
    """
    if not is_hull_set(D, S):
        raise errors.ConstructionFailedError(f"{S.members} is not a hull set of G_C4")

    current = S
    while True:
        subs = [v for v in current if mapping.is_subdivision(v)]
        if not subs:
            break
        s = subs[0]
        for candidate in _replacements(mapping, current, s):
            if is_hull_set(D, candidate):
                logging.debug("Swapped %s for %s", current.members, candidate.members)
                current = candidate
                break
        else:
            raise errors.ConstructionFailedError(
                f"No swap removes subdivision vertex {s} from {current.members}"
            )

    projected = VertexSet(G.n, current.mask)
    if not is_hull_set(G, projected):
        raise errors.ConstructionFailedError(
            f"{projected.members} is a hull set of G_C4 but not of G"
        )
    return projected
