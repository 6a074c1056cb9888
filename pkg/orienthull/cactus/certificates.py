"""Lower-bound certificates attached to classified cycles."""
import logging
from typing import Optional

from orienthull import errors
from orienthull.cactus.cycles import CycleClass, CycleInfo
from orienthull.convexity.extreme import ext_set
from orienthull.convexity.interval import is_geodetic_set
from orienthull.graph.digraph import OrientedGraph
from orienthull.graph.vertex_set import VertexSet


def coconvex_certificate(D: OrientedGraph, c: CycleInfo) -> VertexSet:
    """A set every hull set of D must meet.

    Trap cycles give their whole vertex set, UC2 cycles everything but the
    cut vertex and UC3 cycles the interior of the longer path. For falsely
    satisfactory cycles the uncovered gap is returned instead; it is not
    co-convex and only marks where the extra geodetic vertex goes.
    """
    if c.cls in (CycleClass.TRAP_RECEIVER, CycleClass.TRAP_TRANSMITTER):
        members = c.vertices
    elif c.cls == CycleClass.UC2:
        members = [v for v in c.vertices if v not in c.cut_vertices]
    elif c.cls == CycleClass.UC3:
        members = c.witnesses["long_path"][1:-1]
    elif c.cls.falsely_satisfactory:
        members = c.gap
    else:
        raise errors.CycleIsTSCError(
            f"Cycle {c.vertices} is truly satisfactory"
        )
    return VertexSet.of(D.n, members)


def geodetic_forcing_set(
    D: OrientedGraph,
    c: CycleInfo,
    excluded: Optional[VertexSet] = None,
) -> VertexSet:
    """Non-extreme vertices of a falsely satisfactory cycle.

    Every geodetic set meets the result whenever its complement is not a
    geodetic set; callers check that with forcing_set_holds.

    Args:
        excluded:
            Vertices to leave out, typically those already claimed by the
            co-convex certificates of other cycles
    """
    if c.cls == CycleClass.TSC:
        raise errors.CycleIsTSCError(
            f"Cycle {c.vertices} is truly satisfactory"
        )
    if not c.cls.falsely_satisfactory:
        raise ValueError(
            f"Cycle {c.vertices} is {c.cls.value}; use coconvex_certificate"
        )

    K = VertexSet.of(D.n, c.vertices) - ext_set(D)
    if excluded is not None:
        K = K - excluded
    return K


def forcing_set_holds(D: OrientedGraph, K: VertexSet) -> bool:
    """Whether every geodetic set of D meets K."""
    holds = len(K) > 0 and not is_geodetic_set(D, K.complement())
    if not holds:
        logging.debug("Forcing set %s does not verify", K)
    return holds
