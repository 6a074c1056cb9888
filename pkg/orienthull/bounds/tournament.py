"""Hull sets of tournaments through the directed-triangle closure.

In a tournament a path a -> b -> c with (c, a) an arc is a geodesic, so
the closure that adds every vertex completing a directed triangle with two
members of a set stays inside the convex hull of that set.
"""
import itertools
import logging
from typing import Optional, Tuple

from orienthull import errors
from orienthull.bounds.certificate import BoundCertificate, TraceStep, bound_value
from orienthull.convexity.extreme import ext_set
from orienthull.convexity.interval import hull, is_hull_set
from orienthull.graph.digraph import OrientedGraph
from orienthull.graph.structure import is_tournament
from orienthull.graph.vertex_set import VertexSet, iter_bits, popcount


def _check_tournament(D: OrientedGraph):
    if not is_tournament(D):
        raise errors.NotATournamentError(
            f"{D.m} arcs on {D.n} vertices do not form a tournament"
        )


def _c3_interval_mask(D: OrientedGraph, mask: int) -> int:
    members = list(iter_bits(mask))
    if len(members) < 2:
        return mask

    out = mask
    for a in members:
        # Arcs a -> b inside the set; v with b -> v -> a closes a triangle
        for b in iter_bits(D.out_masks[a] & mask):
            out |= D.out_masks[b] & D.in_masks[a]
    return out


def _c3_closure_mask(D: OrientedGraph, mask: int) -> int:
    while True:
        grown = _c3_interval_mask(D, mask)
        if grown == mask:
            return mask
        mask = grown


def c3_interval(D: OrientedGraph, S: VertexSet) -> VertexSet:
    _check_tournament(D)
    return VertexSet(D.n, _c3_interval_mask(D, S.mask))


def c3_closure(D: OrientedGraph, S: VertexSet) -> VertexSet:
    _check_tournament(D)
    return VertexSet(D.n, _c3_closure_mask(D, S.mask))


def satisfies_tournament_hull_criterion(D: OrientedGraph, S: VertexSet) -> bool:
    """ext(D) in S and hull(S - ext(D)) covers every non-extreme vertex."""
    _check_tournament(D)
    ext = ext_set(D)
    if not ext <= S:
        return False
    return hull(D, S - ext) >= ext.complement()


def _seed_pair(D: OrientedGraph, candidates: int) -> Optional[Tuple[int, int]]:
    for u1, u2 in itertools.combinations(iter_bits(candidates), 2):
        a, b = (u1, u2) if D.has_arc(u1, u2) else (u2, u1)
        # a -> b -> w -> a for some w
        if D.out_masks[b] & D.in_masks[a]:
            return u1, u2
    return None


def _triangle_partners(
    D: OrientedGraph, v: int, closure: int
) -> Tuple[int, ...]:
    """Smallest triangle v -> a -> b -> v, preferring a, b outside closure.

    Returns the triangle vertices that lie outside the closure, or () when v
    is on no directed triangle.
    """
    fallback = ()
    for a in D.out_adj[v]:
        for b in iter_bits(D.out_masks[a] & D.in_masks[v]):
            outside = tuple(x for x in sorted((a, b)) if not closure >> x & 1)
            if len(outside) == 2:
                return outside
            if len(outside) == 1 and not fallback:
                fallback = outside
    return fallback


def tournament_hull_set(D: OrientedGraph) -> BoundCertificate:
    """ext(D) plus pairs of non-extreme vertices whose closure covers V.

    Every directed triangle of a tournament consists of non-extreme
    vertices. Each step adds the two partners of the smallest vertex v left
    outside the closure along a directed triangle through v. When every
    triangle through v already meets the closure only the outside partner
    is added, which still brings in v.
    """
    _check_tournament(D)
    ext = ext_set(D)
    non_ext = ext.complement().mask

    s = 0
    closure = 0
    trace = []
    if non_ext:
        seed = _seed_pair(D, non_ext)
        if seed is None:
            raise errors.ConstructionFailedError(
                "Non-extreme vertices but no directed triangle"
            )
        s = (1 << seed[0]) | (1 << seed[1])
        closure = _c3_closure_mask(D, s)
        trace.append(
            TraceStep(
                pivot=seed[0],
                added=seed,
                set_size=2,
                closure_size=popcount(closure),
            )
        )

    while non_ext & ~closure:
        remaining = non_ext & ~closure
        v = (remaining & -remaining).bit_length() - 1
        partners = _triangle_partners(D, v, closure)
        if not partners:
            raise errors.ConstructionFailedError(
                f"No directed triangle through {v} leaves the closure"
            )
        for x in partners:
            s |= 1 << x
        closure = _c3_closure_mask(D, closure | s)
        trace.append(
            TraceStep(
                pivot=v,
                added=partners,
                set_size=popcount(s),
                closure_size=popcount(closure),
            )
        )

    hull_set = ext | VertexSet(D.n, s)

    # The trace ledger counts non-extreme vertices only
    cert = BoundCertificate(
        hull_set=hull_set,
        ext_count=len(ext),
        bound_value=bound_value(D.n, len(ext)),
        trace=tuple(
            TraceStep(
                pivot=t.pivot,
                added=t.added,
                set_size=t.set_size + len(ext),
                closure_size=t.closure_size + len(ext),
            )
            for t in trace
        ),
    )

    if not is_hull_set(D, hull_set) or not cert.within_bound():
        raise errors.ConstructionFailedError(
            f"Triangle construction gave {hull_set.members}, not a hull set "
            f"within {cert.bound_value}"
        )

    logging.debug(
        "Tournament hull set: %d vertices, %d extreme", len(hull_set), len(ext)
    )
    return cert
