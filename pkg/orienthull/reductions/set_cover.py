"""Set-cover instances, the exhaustive optimum and a desk-scale corpus."""
import dataclasses
import itertools
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from orienthull import errors


@dataclasses.dataclass(frozen=True)
class SetCoverInstance:
    # U = {1, ..., universe_size}
    universe_size: int

    # F_1, ..., F_m, stored 0-based as family[0], ..., family[m - 1]
    family: Tuple[FrozenSet[int], ...]

    budget: int

    @property
    def m(self) -> int:
        return len(self.family)

    @property
    def universe(self) -> FrozenSet[int]:
        return frozenset(range(1, self.universe_size + 1))

    def validate(self) -> "SetCoverInstance":
        if not self.family:
            raise errors.InvalidInstanceError("Empty family")
        for i, f in enumerate(self.family):
            if not f <= self.universe:
                raise errors.InvalidInstanceError(
                    f"F_{i + 1} = {sorted(f)} is not a subset of 1..{self.universe_size}"
                )
        missing = self.universe - frozenset().union(*self.family)
        if missing:
            raise errors.InvalidInstanceError(
                f"Family does not cover {sorted(missing)}"
            )
        return self

    def covers(self, indices: Sequence[int]) -> bool:
        return frozenset().union(*(self.family[i] for i in indices)) == self.universe


def make_instance(
    universe_size: int, family: Sequence[Sequence[int]], budget: int
) -> SetCoverInstance:
    return SetCoverInstance(
        universe_size=universe_size,
        family=tuple(frozenset(f) for f in family),
        budget=budget,
    ).validate()


def min_set_cover(instance: SetCoverInstance) -> Tuple[int, Tuple[int, ...]]:
    """Smallest cover, lexicographically first among those of that size.

    Returns:
        The cover size and the 0-based indices of its sets
    """
    instance.validate()
    for k in range(1, instance.m + 1):
        for combo in itertools.combinations(range(instance.m), k):
            if instance.covers(combo):
                return k, combo

    # validate() guarantees the whole family covers U
    raise errors.InvalidInstanceError("Family does not cover the universe")


def _canonical(n: int, family: Sequence[FrozenSet[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Smallest sorted form of the family over all relabellings of U."""
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        relabel = dict(zip(range(1, n + 1), perm))
        form = tuple(sorted(tuple(sorted(relabel[x] for x in f)) for f in family))
        if best is None or form < best:
            best = form
    return best


def enumerate_set_cover_instances(
    max_n: int, max_m: int
) -> Iterator[SetCoverInstance]:
    """Every covering family of distinct nonempty sets, up to relabelling U.

    Instances come ordered by universe size, then family size; the budget
    of each is its family size.
    """
    for n in range(1, max_n + 1):
        subsets: List[FrozenSet[int]] = [
            frozenset(c)
            for r in range(1, n + 1)
            for c in itertools.combinations(range(1, n + 1), r)
        ]
        for m in range(1, max_m + 1):
            seen = set()
            for family in itertools.combinations(subsets, m):
                if frozenset().union(*family) != frozenset(range(1, n + 1)):
                    continue
                form = _canonical(n, family)
                if form in seen:
                    continue
                seen.add(form)
                yield make_instance(n, form, m)
