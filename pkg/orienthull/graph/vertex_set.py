"""Dense vertex subsets backed by an integer bitmask."""
import dataclasses
from typing import Iterable, Iterator, Tuple


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the positions of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclasses.dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices 0..n-1 of some graph."""

    # Number of vertices of the ambient graph
    n: int

    # Bit v is set iff vertex v is a member
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(
                f"Mask {self.mask:#x} has members outside 0..{self.n - 1}"
            )

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"Vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.of(self.n, (v,)) | self

    def remove(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~(1 << v))

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return not self.mask & other.mask

    def _check_universe(self, other: "VertexSet"):
        if self.n != other.n:
            raise ValueError(
                f"Vertex sets over {self.n} and {other.n} vertices mixed"
            )

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "VertexSet") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {list(self.members)})"

    def to_string(self) -> str:
        return ",".join(str(v) for v in self.members)
