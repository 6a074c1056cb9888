"""Certificates returned by the constructive upper-bound procedures."""
import dataclasses
from typing import Tuple

from orienthull.graph.vertex_set import VertexSet


@dataclasses.dataclass(frozen=True)
class TraceStep:
    # Vertex the step was meant to absorb into the hull
    pivot: int

    # Vertices added to the set at this step (one or two)
    added: Tuple[int, ...]

    # |S_i| and the size of the closure reached after the step
    set_size: int
    closure_size: int


@dataclasses.dataclass(frozen=True)
class BoundCertificate:
    hull_set: VertexSet
    ext_count: int

    # |ext| + floor(2 (n - |ext|) / 3)
    bound_value: int

    trace: Tuple[TraceStep, ...] = ()

    def within_bound(self) -> bool:
        return len(self.hull_set) <= self.bound_value

    def ledger_holds(self) -> bool:
        """|S_i| - |ext| <= 2/3 |closure_i - ext| after every step."""
        return all(
            3 * (s.set_size - self.ext_count)
            <= 2 * (s.closure_size - self.ext_count)
            for s in self.trace
        )


def bound_value(n: int, ext_count: int) -> int:
    return ext_count + (2 * (n - ext_count)) // 3
