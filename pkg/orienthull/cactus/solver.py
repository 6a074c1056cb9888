"""Minimum hull and geodetic sets of oriented cacti in polynomial time.

A minimum hull set is ext(D) plus one vertex of every unsatisfactory
cycle; a minimum geodetic set adds one vertex of every falsely
satisfactory cycle. Every returned set is checked against the interval
machinery, and the lower bound is backed by pairwise disjoint sets that
every solution must meet.

The choice per cycle is not always free: when no cut vertex of a cycle
connects it to the rest of the set on the side a choice relies on, the
next candidate of that cycle is tried. Cacti where the cycle count itself
is short, e.g. two satisfactory directed cycles sharing a vertex with no
sink downstream, get an exhaustive search and an uncertified solution.
"""
import dataclasses
import itertools
import logging
from typing import Dict, List, Optional, Tuple

from orienthull import errors
from orienthull.config import solver_config
from orienthull.cactus.certificates import (
    coconvex_certificate,
    forcing_set_holds,
    geodetic_forcing_set,
)
from orienthull.cactus.cycles import CycleClass, CycleInfo, classify_cycles
from orienthull.convexity.extreme import ext_set
from orienthull.convexity.interval import (
    geodesics,
    hull_mask,
    hull_rounds,
    interval,
    interval_mask,
    is_coconvex,
)
from orienthull.convexity.solvers import (
    GEODETIC,
    HULL,
    Objective,
    min_geodetic_set,
    min_hull_set,
)
from orienthull.graph.digraph import OrientedGraph
from orienthull.graph.structure import is_cactus, is_connected, is_tree_underlying
from orienthull.graph.vertex_set import VertexSet


@dataclasses.dataclass(frozen=True)
class CactusSolution:
    kind: Objective

    vertex_set: VertexSet

    # |ext(D)| + number of certified cycles
    lower_bound: int

    # True iff every certificate verified and the set meets the bound
    certified: bool

    # The graph is one directed cycle and the exact solver was used
    degenerate_single_cycle: bool

    # No verified set came out of the cycle choices and the exact solver
    # was used instead
    exact_fallback: bool = False

    cycles: Tuple[CycleInfo, ...] = ()

    # (cycle index, co-convex set) for every unsatisfactory cycle
    certificates: Tuple[Tuple[int, VertexSet], ...] = ()

    # (cycle index, forcing set) for every falsely satisfactory cycle
    forcing_sets: Tuple[Tuple[int, VertexSet], ...] = ()

    @property
    def size(self) -> int:
        return len(self.vertex_set)

    def class_counts(self) -> Dict[str, int]:
        counts = {c.value: 0 for c in CycleClass}
        for c in self.cycles:
            counts[c.cls.value] += 1
        return counts


def _check_cactus(D: OrientedGraph):
    if not is_cactus(D):
        raise errors.NotACactusError("Some block is neither an edge nor a cycle")
    if not is_connected(D):
        raise errors.DisconnectedError("Cactus solvers need a connected graph")


def _is_degenerate(D: OrientedGraph, cycles: List[CycleInfo]) -> bool:
    return (
        len(cycles) == 1
        and cycles[0].is_directed
        and len(cycles[0].vertices) == D.n
    )


def _degenerate_solution(
    D: OrientedGraph,
    kind: str,
    cycles: List[CycleInfo],
    allow_degenerate: bool,
    config,
) -> CactusSolution:
    if not allow_degenerate:
        raise errors.DegenerateSingleCycleError(
            f"The graph is a directed {D.n}-cycle"
        )
    logging.warning(
        "Graph is a single directed cycle; falling back to exhaustive search"
    )
    solve = min_hull_set if kind == HULL else min_geodetic_set
    result = solve(D, config)
    return CactusSolution(
        kind=kind,
        vertex_set=result.witness,
        lower_bound=result.optimum,
        certified=True,
        degenerate_single_cycle=True,
        cycles=tuple(cycles),
    )


def tree_solution(D: OrientedGraph, kind: Objective = GEODETIC) -> CactusSolution:
    """ext(D), which is both the unique minimum hull and geodetic set of a
    tree."""
    if not is_tree_underlying(D):
        raise errors.NotATreeError("The underlying graph is not a tree")

    S = ext_set(D)
    if not interval(D, S).is_full():
        raise errors.ConstructionFailedError(
            f"ext(D) = {S} is not geodetic in an oriented tree"
        )
    return CactusSolution(
        kind=kind,
        vertex_set=S,
        lower_bound=len(S),
        certified=True,
        degenerate_single_cycle=False,
    )


def _unsatisfactory_certificates(
    D: OrientedGraph, cycles: List[CycleInfo], ext: VertexSet
) -> Tuple[Tuple[Tuple[int, VertexSet], ...], bool]:
    certificates = []
    ok = True
    claimed = ext
    for i, c in enumerate(cycles):
        if not c.cls.unsatisfactory:
            continue
        K = coconvex_certificate(D, c)
        if not is_coconvex(D, K):
            logging.warning("Certificate %s of cycle %s is not co-convex", K, c.vertices)
            ok = False
            continue
        if not K.isdisjoint(claimed):
            logging.warning("Certificate %s of cycle %s overlaps another", K, c.vertices)
            ok = False
            continue
        claimed = claimed | K
        certificates.append((i, K))
    return tuple(certificates), ok


def _forcing_sets(
    D: OrientedGraph,
    cycles: List[CycleInfo],
    claimed: VertexSet,
) -> Tuple[Tuple[Tuple[int, VertexSet], ...], bool]:
    """Forcing sets of the falsely satisfactory cycles, made pairwise disjoint.

    Two such cycles can share a cut vertex. The shared vertex is dropped
    from the later set if that set still verifies, else from the earlier one.
    Only the sets that verify are returned; the flag says whether all did.
    """
    found: List[Tuple[int, VertexSet]] = []
    for i, c in enumerate(cycles):
        if not c.cls.falsely_satisfactory:
            continue
        K = geodetic_forcing_set(D, c, excluded=claimed)
        for j, (idx, prev) in enumerate(found):
            shared = K & prev
            if len(shared) == 0:
                continue
            if forcing_set_holds(D, K - shared):
                K = K - shared
            elif forcing_set_holds(D, prev - shared):
                found[j] = (idx, prev - shared)
            else:
                K = K - shared
        found.append((i, K))

    held = tuple((i, K) for i, K in found if forcing_set_holds(D, K))
    return held, len(held) == len(found)


def _choice_search(
    D: OrientedGraph, cycles: List[CycleInfo], kind: Objective, config
) -> Optional[VertexSet]:
    """ext(D) plus one candidate vertex per cycle, the first that verifies.

    Candidate sets are tried in product order, so the rule-based choices
    come first; the search stops after config.cactus.max_choice_sets sets.
    """
    table = geodesics(D)
    full = (1 << D.n) - 1
    base = ext_set(D).mask
    pools = [c.candidates for c in cycles]
    combos = itertools.islice(
        itertools.product(*pools), config.cactus.max_choice_sets
    )
    for tried, combo in enumerate(combos, 1):
        if len(set(combo)) < len(combo):
            continue
        mask = base
        for v in combo:
            mask |= 1 << v
        if kind == HULL:
            covered = hull_mask(table, mask)[0]
        else:
            covered = interval_mask(table, mask)
        if covered == full:
            if tried > 1:
                logging.info("Cycle choices verified after %d candidate sets", tried)
            return VertexSet(D.n, mask)
    return None


def _exact_fallback(
    D: OrientedGraph,
    kind: Objective,
    cycles: List[CycleInfo],
    lower_bound: int,
    certificates,
    forcing_sets,
    config,
) -> CactusSolution:
    if not config.cactus.exact_fallback:
        raise errors.ConstructionFailedError(
            f"No {kind} set of size {lower_bound} built from the cycle choices"
        )
    logging.warning(
        "Cycle choices give no certified %s set; falling back to exhaustive search",
        kind,
    )
    solve = min_hull_set if kind == HULL else min_geodetic_set
    result = solve(D, config)
    return CactusSolution(
        kind=kind,
        vertex_set=result.witness,
        lower_bound=lower_bound,
        certified=False,
        degenerate_single_cycle=False,
        exact_fallback=True,
        cycles=tuple(cycles),
        certificates=certificates,
        forcing_sets=forcing_sets,
    )


def min_hull_set_cactus(
    D: OrientedGraph, allow_degenerate: bool = True, config=None
) -> CactusSolution:
    _check_cactus(D)
    config = config if config is not None else solver_config()
    cycles = classify_cycles(D)
    if _is_degenerate(D, cycles):
        return _degenerate_solution(D, HULL, cycles, allow_degenerate, config)

    ext = ext_set(D)
    certificates, ok = _unsatisfactory_certificates(D, cycles, ext)
    lower_bound = len(ext) + len(certificates)

    S = _choice_search(D, [c for c in cycles if c.cls.unsatisfactory], HULL, config)
    if S is None or not ok:
        return _exact_fallback(D, HULL, cycles, lower_bound, certificates, (), config)
    if hull_rounds(D, S) > 2:
        logging.warning("The hull of %s needs more than two interval steps", S)

    logging.info(
        "Cactus hull set of size %d, lower bound %d", len(S), lower_bound
    )
    return CactusSolution(
        kind=HULL,
        vertex_set=S,
        lower_bound=lower_bound,
        certified=len(S) == lower_bound,
        degenerate_single_cycle=False,
        cycles=tuple(cycles),
        certificates=certificates,
    )


def min_geodetic_set_cactus(
    D: OrientedGraph, allow_degenerate: bool = True, config=None
) -> CactusSolution:
    _check_cactus(D)
    config = config if config is not None else solver_config()
    cycles = classify_cycles(D)
    if _is_degenerate(D, cycles):
        return _degenerate_solution(D, GEODETIC, cycles, allow_degenerate, config)

    ext = ext_set(D)
    certificates, ok = _unsatisfactory_certificates(D, cycles, ext)
    claimed = VertexSet.empty(D.n)
    for _, K in certificates:
        claimed = claimed | K
    forcing_sets, forcing_ok = _forcing_sets(D, cycles, claimed)
    lower_bound = len(ext) + len(certificates) + len(forcing_sets)

    chosen = [
        c for c in cycles
        if c.cls.unsatisfactory or c.cls.falsely_satisfactory
    ]
    S = _choice_search(D, chosen, GEODETIC, config)
    if S is None or not (ok and forcing_ok):
        return _exact_fallback(
            D, GEODETIC, cycles, lower_bound, certificates, forcing_sets, config
        )

    logging.info(
        "Cactus geodetic set of size %d, lower bound %d", len(S), lower_bound
    )
    return CactusSolution(
        kind=GEODETIC,
        vertex_set=S,
        lower_bound=lower_bound,
        certified=len(S) == lower_bound,
        degenerate_single_cycle=False,
        cycles=tuple(cycles),
        certificates=certificates,
        forcing_sets=forcing_sets,
    )


def solve_cactus(
    D: OrientedGraph, kind: Objective, allow_degenerate: bool = True, config=None
) -> CactusSolution:
    if kind == HULL:
        return min_hull_set_cactus(D, allow_degenerate, config)
    elif kind == GEODETIC:
        return min_geodetic_set_cactus(D, allow_degenerate, config)
    raise ValueError(f"Unknown objective {kind}")
