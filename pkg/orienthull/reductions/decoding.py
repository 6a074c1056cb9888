"""Reading a set cover back out of a geodetic set of a reduction gadget.

Element vertices of a geodetic set are first swapped for a set vertex
that owns them. The set vertices left over name the chosen sets.
"""
import logging
from typing import Tuple

from orienthull import errors
from orienthull.convexity.interval import is_geodetic_set
from orienthull.graph.digraph import OrientedGraph
from orienthull.graph.vertex_set import VertexSet
from orienthull.reductions.gadgets import SPLIT, GadgetMapping, RoleKind


def normalize(D: OrientedGraph, mapping: GadgetMapping, S: VertexSet) -> VertexSet:
    """Swaps every element vertex u_j for its smallest in-neighbour f_i.

    On the split gadget x is dropped as well.
    """
    out = S
    for v in S:
        role = mapping.role(v)
        if role.kind == RoleKind.ELEMENT:
            owners = [a for a in D.in_adj[v] if mapping.role(a).kind == RoleKind.SET]
            out = out.remove(v).add(min(owners))
        elif mapping.kind == SPLIT and role.kind == RoleKind.APEX and role.name == "x":
            out = out.remove(v)
    return out


def decode_cover(
    D: OrientedGraph, mapping: GadgetMapping, S: VertexSet, instance=None
) -> Tuple[int, ...]:
    """0-based indices of the sets a geodetic set of the gadget selects.

    Args:
        D:
            The gadget
        mapping:
            Its vertex roles
        S:
            A geodetic set of D
        instance:
            When given, the decoded indices are checked to cover its universe
    Returns:
        Sorted family indices; at most |S| - 3 of them
    """
    if not is_geodetic_set(D, S):
        raise errors.NotGeodeticError(f"{S.members} is not a geodetic set")

    normalized = normalize(D, mapping, S)
    cover = tuple(
        mapping.role(v).index - 1
        for v in normalized
        if mapping.role(v).kind == RoleKind.SET
    )
    logging.debug("Decoded %s into sets %s", S.members, cover)

    if len(cover) > len(S) - len(mapping.forced()):
        raise errors.ConstructionFailedError(
            f"{len(cover)} sets decoded from a geodetic set of size {len(S)}"
        )
    if instance is not None and not instance.covers(cover):
        raise errors.ConstructionFailedError(
            f"Decoded sets {cover} do not cover the universe"
        )
    return cover
