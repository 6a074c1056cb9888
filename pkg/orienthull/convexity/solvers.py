"""Exact minimum hull and geodetic sets by exhaustive search.

Candidates are supersets of a forced set (the extreme vertices in the
directed case, the simplicial vertices in the undirected case), visited by
increasing number of extra vertices and, within one size, in lexicographic
order of the extra vertices. The first candidate satisfying the predicate
is therefore both minimum and deterministic.
"""
import dataclasses
from functools import partial
import itertools
import logging
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple

from typing_extensions import Literal

from orienthull import errors
from orienthull.config import solver_config
from orienthull.convexity.extreme import ext_set, simplicial_set
from orienthull.convexity.interval import (
    Graph,
    geodesics,
    hull_mask,
    interval_mask,
)
from orienthull.graph.digraph import OrientedGraph, UndirectedGraph
from orienthull.graph.distances import GeodesicTable
from orienthull.graph.vertex_set import VertexSet


HULL = "hull"
GEODETIC = "geodetic"

Objective = Literal["hull", "geodetic"]


@dataclasses.dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: VertexSet
    # Candidate sets evaluated before (and including) the witness
    nodes_explored: int


def _satisfies(table: GeodesicTable, mask: int, objective: Objective) -> bool:
    full = (1 << table.n) - 1
    if objective == HULL:
        return hull_mask(table, mask)[0] == full
    return interval_mask(table, mask) == full


def _to_mask(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _first_hit(
    chunk: Sequence[Tuple[int, ...]],
    table: GeodesicTable,
    forced: int,
    objective: str,
) -> Tuple[int, int]:
    """(index of the first satisfying candidate or -1, candidates tried)."""
    for i, combo in enumerate(chunk):
        if _satisfies(table, forced | _to_mask(combo), objective):
            return i, i + 1
    return -1, len(chunk)


def _chunks(
    it: Iterator[Tuple[int, ...]], size: int
) -> Iterator[List[Tuple[int, ...]]]:
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def _search(
    table: GeodesicTable,
    forced: VertexSet,
    objective: Objective,
    config,
) -> SolveResult:
    n = table.n
    free = [v for v in range(n) if v not in forced]
    if len(free) > config.solver.max_free_vertices:
        raise errors.InstanceTooLargeError(
            f"{len(free)} free vertices exceed the limit of "
            f"{config.solver.max_free_vertices}"
        )

    logging.debug(
        "Exhaustive %s search: %d forced, %d free vertices",
        objective, len(forced), len(free),
    )

    explored = 0
    num_workers = config.solver.num_workers
    pool = Pool(processes=num_workers) if num_workers > 1 else None
    try:
        for k in range(len(free) + 1):
            combos = itertools.combinations(free, k)
            chunks = _chunks(combos, config.solver.chunk_size)
            fn = partial(
                _first_hit, table=table, forced=forced.mask, objective=objective
            )
            results = pool.imap(fn, chunks) if pool is not None else map(fn, chunks)

            # Chunks are consumed in order, so the first hit is the
            # lexicographically smallest one at this size
            for chunk_index, (hit, tried) in enumerate(results):
                explored += tried
                if hit >= 0:
                    break
            else:
                continue

            # Recover the combination from its rank within this size
            rank = chunk_index * config.solver.chunk_size + hit
            combo = next(
                itertools.islice(itertools.combinations(free, k), rank, None)
            )
            witness = VertexSet(n, forced.mask | _to_mask(combo))
            return SolveResult(
                optimum=len(witness), witness=witness, nodes_explored=explored
            )
    finally:
        if pool is not None:
            pool.terminate()

    # Unreachable: the full vertex set always satisfies both predicates
    raise errors.ConstructionFailedError("No candidate satisfied the predicate")


def _verify(G: Graph, result: SolveResult, objective: str, config):
    if not config.solver.verify_witnesses:
        return
    if not _satisfies(geodesics(G), result.witness.mask, objective):
        raise errors.ConstructionFailedError(
            f"Witness {result.witness} is not a {objective} set"
        )


def min_hull_set(D: OrientedGraph, config=None) -> SolveResult:
    """Minimum hull set; ext(D) is forced into every candidate."""
    config = config if config is not None else solver_config()
    result = _search(geodesics(D), ext_set(D), HULL, config)
    _verify(D, result, HULL, config)
    return result


def min_geodetic_set(D: OrientedGraph, config=None) -> SolveResult:
    """Minimum geodetic set; ext(D) is forced into every candidate."""
    config = config if config is not None else solver_config()
    result = _search(geodesics(D), ext_set(D), GEODETIC, config)
    _verify(D, result, GEODETIC, config)
    return result


def all_minimum_sets(
    G: Graph,
    objective: Objective,
    forced: Optional[VertexSet] = None,
    config=None,
) -> List[VertexSet]:
    """Every set of minimum cardinality satisfying the objective."""
    config = config if config is not None else solver_config()
    if forced is None:
        forced = ext_set(G) if isinstance(G, OrientedGraph) else simplicial_set(G)
    table = geodesics(G)
    best = _search(table, forced, objective, config)

    free = [v for v in range(G.n) if v not in forced]
    k = best.optimum - len(forced)
    return [
        VertexSet(G.n, forced.mask | _to_mask(combo))
        for combo in itertools.combinations(free, k)
        if _satisfies(table, forced.mask | _to_mask(combo), objective)
    ]


def all_minimum_hull_sets(D: OrientedGraph, config=None) -> List[VertexSet]:
    return all_minimum_sets(D, HULL, config=config)


def all_minimum_geodetic_sets(D: OrientedGraph, config=None) -> List[VertexSet]:
    return all_minimum_sets(D, GEODETIC, config=config)
