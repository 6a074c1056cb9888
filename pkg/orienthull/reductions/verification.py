"""Exhaustive check that min cover + 3 equals the geodetic number."""
import dataclasses
import logging
from typing import Dict, Tuple

from orienthull import errors
from orienthull.config import solver_config
from orienthull.convexity.solvers import min_geodetic_set
from orienthull.graph.structure import (
    is_bipartite_underlying,
    is_cobipartite_underlying,
    is_dag,
    is_split_underlying,
)
from orienthull.reductions.gadgets import (
    BIPARTITE,
    COBIPARTITE,
    KINDS,
    SPLIT,
    build_gadget,
    partition,
)
from orienthull.reductions.set_cover import SetCoverInstance, min_set_cover


@dataclasses.dataclass(frozen=True)
class EquivalenceReport:
    optcover: int
    cover: Tuple[int, ...]

    # Exact geodetic number of every gadget, keyed by gadget kind
    ogn: Dict[str, int]

    # Structural class checks of every gadget
    structure_ok: Dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(
            self.ogn[k] == self.optcover + 3 and self.structure_ok[k]
            for k in self.ogn
        )

    def summary(self) -> str:
        return f"optcover: {self.optcover}, ogn: " + "/".join(
            str(self.ogn[k]) for k in KINDS
        )


def gadget_structure_ok(kind: str, D, mapping) -> bool:
    first, second = partition(mapping)
    if kind == BIPARTITE:
        return is_dag(D) and is_bipartite_underlying(D)
    elif kind == SPLIT:
        return is_split_underlying(D, first, second)
    elif kind == COBIPARTITE:
        return is_dag(D) and is_cobipartite_underlying(D, first, second)
    raise ValueError(f"Unknown gadget kind {kind}")


def verify_equivalence(instance: SetCoverInstance, config=None) -> EquivalenceReport:
    config = config if config is not None else solver_config()
    instance.validate()
    if (
        instance.universe_size > config.reductions.max_universe
        or instance.m > config.reductions.max_family
    ):
        raise errors.InstanceTooLargeError(
            f"Instance with n={instance.universe_size}, m={instance.m} exceeds "
            f"{config.reductions.max_universe}/{config.reductions.max_family}"
        )

    optcover, cover = min_set_cover(instance)
    ogn = {}
    structure_ok = {}
    for kind in KINDS:
        D, mapping, _ = build_gadget(kind, instance)
        ogn[kind] = min_geodetic_set(D, config).optimum
        structure_ok[kind] = gadget_structure_ok(kind, D, mapping)

    report = EquivalenceReport(
        optcover=optcover, cover=cover, ogn=ogn, structure_ok=structure_ok
    )
    if not report.holds:
        logging.warning(
            "Equivalence fails on %s: %s", instance, report.summary()
        )
    return report
