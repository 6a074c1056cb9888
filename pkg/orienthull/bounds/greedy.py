"""The general 2/3 upper bound on the hull number, made constructive.

Starting from ext(D), every round picks the smallest vertex v outside the
current hull. Since v is not extreme it has an in-neighbour v1 and an
out-neighbour v2 with (v1, v2) not an arc, so v1 -> v -> v2 is a geodesic
and adding whichever of v1, v2 lie outside the hull absorbs v. A round adds
two vertices for at least three new hull vertices, or one for at least two.
"""
import logging
from typing import Optional, Tuple

from orienthull import errors
from orienthull.bounds.certificate import BoundCertificate, TraceStep, bound_value
from orienthull.convexity.extreme import ext_set
from orienthull.convexity.interval import geodesics, hull_mask
from orienthull.graph.digraph import OrientedGraph
from orienthull.graph.vertex_set import VertexSet, popcount


def _witness_pair(
    D: OrientedGraph, v: int, hull: int
) -> Optional[Tuple[int, int]]:
    """Lexicographically smallest (v1, v2), preferring both outside hull."""
    fallback = None
    for v1 in D.in_adj[v]:
        for v2 in D.out_adj[v]:
            if D.has_arc(v1, v2):
                continue
            outside = (not hull >> v1 & 1) + (not hull >> v2 & 1)
            if outside == 2:
                return v1, v2
            if outside == 1 and fallback is None:
                fallback = (v1, v2)
    return fallback


def greedy_hull_set(D: OrientedGraph) -> BoundCertificate:
    table = geodesics(D)
    ext = ext_set(D)
    full = (1 << D.n) - 1

    s = ext.mask
    closure, _ = hull_mask(table, s)
    trace = []
    while closure != full:
        outside = full & ~closure
        v = (outside & -outside).bit_length() - 1
        pair = _witness_pair(D, v, closure)
        if pair is None:
            # Both endpoints inside a convex set would put v inside it too
            raise errors.ConstructionFailedError(
                f"No in/out neighbour pair absorbs vertex {v}"
            )

        added = tuple(x for x in pair if not closure >> x & 1)
        for x in added:
            s |= 1 << x
        closure, _ = hull_mask(table, closure | s)
        trace.append(
            TraceStep(
                pivot=v,
                added=added,
                set_size=popcount(s),
                closure_size=popcount(closure),
            )
        )

    cert = BoundCertificate(
        hull_set=VertexSet(D.n, s),
        ext_count=len(ext),
        bound_value=bound_value(D.n, len(ext)),
        trace=tuple(trace),
    )
    if not cert.ledger_holds() or not cert.within_bound():
        raise errors.ConstructionFailedError(
            f"Greedy set of size {len(cert.hull_set)} breaks the bound "
            f"{cert.bound_value}"
        )

    logging.debug(
        "Greedy hull set: %d vertices in %d steps", len(cert.hull_set), len(trace)
    )
    return cert
