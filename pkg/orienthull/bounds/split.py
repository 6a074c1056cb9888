"""Hull sets of oriented graphs whose underlying graph is split."""
import logging

from orienthull import errors
from orienthull.bounds.certificate import BoundCertificate
from orienthull.bounds.tournament import tournament_hull_set
from orienthull.convexity.extreme import ext_set
from orienthull.convexity.interval import is_hull_set
from orienthull.graph.digraph import OrientedGraph, induced_subgraph
from orienthull.graph.structure import is_clique, is_stable
from orienthull.graph.vertex_set import VertexSet


def _check_split_partition(D: OrientedGraph, stable: VertexSet, clique: VertexSet):
    if stable.n != D.n or clique.n != D.n:
        raise errors.BadPartitionError("Partition sets are over the wrong universe")
    if not stable.isdisjoint(clique) or not (stable | clique).is_full():
        raise errors.BadPartitionError(
            f"{stable.members} and {clique.members} do not partition V"
        )
    if not is_stable(D, stable):
        raise errors.BadPartitionError(f"{stable.members} is not stable")
    if not is_clique(D, clique):
        raise errors.BadPartitionError(f"{clique.members} is not a clique")
    if len(clique) < 2:
        raise errors.CliqueTooSmallError(
            f"Clique side has {len(clique)} vertices, need at least 2"
        )

    for c in clique:
        # c could join the stable side
        if not any(D.adjacent(c, s) for s in stable):
            raise errors.StableNotMaximalError(
                f"Clique vertex {c} has no neighbour in the stable side"
            )


def split_hull_set(
    D: OrientedGraph, stable: VertexSet, clique: VertexSet
) -> BoundCertificate:
    """(ext(D) & stable) | ext(D[C]) | C', with C' from the clique tournament.

    Every non-extreme stable vertex has an in-neighbour and an out-neighbour
    in the clique that form a length-two geodesic through it, so covering
    the clique is enough.

    Args:
        D:
            Oriented graph with a split underlying graph
        stable:
            Maximal stable side of the partition
        clique:
            Clique side, at least two vertices
    Returns:
        A verified hull set within
        |ext(D) & stable| + |ext(D[C])| + floor(2/3 |C - ext(D[C])|)
    """
    _check_split_partition(D, stable, clique)

    ext = ext_set(D)
    sub, old = induced_subgraph(D, clique)
    clique_cert = tournament_hull_set(sub)

    hull_set = (ext & stable) | VertexSet.of(
        D.n, (old[i] for i in clique_cert.hull_set)
    )
    bound = len(ext & stable) + clique_cert.bound_value

    if not is_hull_set(D, hull_set) or len(hull_set) > bound:
        raise errors.ConstructionFailedError(
            f"Split construction gave {hull_set.members}, not a hull set "
            f"within {bound}"
        )

    logging.debug("Split hull set: %s (bound %d)", hull_set.to_string(), bound)
    return BoundCertificate(
        hull_set=hull_set,
        ext_count=len(ext),
        bound_value=bound,
    )
