"""Relative ideals of a numerical semigroup.

A relative ideal is a set A of integers with A + Gamma contained in A that is
bounded below; it is stored by its unique minimal generating set.  All binary
operations work on a finite window: below it nothing is a member, above the
conductor everything is.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatch, EmptyGenerators, ModulusNotInSemigroup
from .semigroup import AperySet, NumericalSemigroup


def _minimalize(gamma: NumericalSemigroup, gens: Iterable[int]) -> tuple[int, ...]:
    # a generator is redundant iff it differs from a kept smaller one by a member
    kept: list[int] = []
    for g in sorted(set(gens)):
        if not any(gamma.contains(g - h) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class RelativeIdeal:
    ambient: NumericalSemigroup
    minimal_generators: tuple[int, ...]

    @staticmethod
    def from_generators(
        gamma: NumericalSemigroup, gens: Iterable[int]
    ) -> "RelativeIdeal":
        gens = list(gens)
        if not gens:
            raise EmptyGenerators("a relative ideal needs at least one generator")
        return RelativeIdeal(gamma, _minimalize(gamma, gens))

    @staticmethod
    def of(gamma: NumericalSemigroup) -> "RelativeIdeal":
        """The semigroup itself, viewed as the relative ideal (0)."""
        return RelativeIdeal(gamma, (0,))

    # -- structure ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        """Every integer >= conductor is a member."""
        return max(self.minimal_generators) + self.ambient.frobenius + 1

    @property
    def min_element(self) -> int:
        return self.minimal_generators[0]

    def is_principal(self) -> bool:
        return len(self.minimal_generators) == 1

    def contains(self, x: int) -> bool:
        return any(self.ambient.contains(x - g) for g in self.minimal_generators)

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def members_in(self, lo: int, hi: int) -> list[int]:
        return [x for x in range(lo, hi + 1) if self.contains(x)]

    def _check_ambient(self, other: "RelativeIdeal") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch("operands live over different semigroups")

    def equals(self, other: "RelativeIdeal") -> bool:
        self._check_ambient(other)
        return self.minimal_generators == other.minimal_generators

    # -- arithmetic --------------------------------------------------------

    def add(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check_ambient(other)
        return RelativeIdeal.from_generators(
            self.ambient,
            (a + b for a in self.minimal_generators for b in other.minimal_generators),
        )

    def union(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check_ambient(other)
        return RelativeIdeal.from_generators(
            self.ambient, self.minimal_generators + other.minimal_generators
        )

    def intersect(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check_ambient(other)
        lo = max(self.min_element, other.min_element)
        # beyond max(conductors) everything is a member, but minimal
        # generators can still appear up to F further out
        hi = max(self.conductor, other.conductor) + max(self.ambient.frobenius, 0)
        gamma = self.ambient
        gens: list[int] = []
        for x in range(lo, hi + 1):
            if (
                self.contains(x)
                and other.contains(x)
                and not any(gamma.contains(x - g) for g in gens)
            ):
                gens.append(x)
        return RelativeIdeal(gamma, tuple(gens))

    def subtract(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """The quotient {z | z + other is contained in self}."""
        self._check_ambient(other)
        bgens = other.minimal_generators
        lo = self.min_element - max(bgens)
        hi = self.conductor - min(bgens) + max(self.ambient.frobenius, 0)
        gamma = self.ambient
        gens: list[int] = []
        for z in range(lo, hi + 1):
            if all(self.contains(z + b) for b in bgens) and not any(
                gamma.contains(z - g) for g in gens
            ):
                gens.append(z)
        return RelativeIdeal(gamma, tuple(gens))

    def dual(self) -> "RelativeIdeal":
        return RelativeIdeal.of(self.ambient).subtract(self)

    def shift(self, x: int) -> "RelativeIdeal":
        return RelativeIdeal(
            self.ambient, tuple(g + x for g in self.minimal_generators)
        )

    def apery(self, z: int) -> AperySet:
        if z <= 0 or not self.ambient.contains(z):
            raise ModulusNotInSemigroup(
                f"{z} is not a nonzero member of the ambient semigroup"
            )
        elements = set()
        lo = self.min_element
        for r in range(z):
            x = lo + ((r - lo) % z)
            while not self.contains(x):
                x += z
            elements.add(x)
        return AperySet(z, frozenset(elements))

    def to_json(self) -> dict:
        return {
            "ambient": list(self.ambient.minimal_generators),
            "generators": list(self.minimal_generators),
        }

    __add__ = add
    __or__ = union
    __and__ = intersect
    __sub__ = subtract


def enumerate_ideals_up_to_shift(
    gamma: NumericalSemigroup, max_extra_gens: int | None = None
) -> Iterator[RelativeIdeal]:
    """One representative per translation class of relative ideals.

    Normalized representatives are (0) together with ideals (0, t1, ..., tk)
    where the t's form an antichain of gaps (no difference in the semigroup).
    Output order is lexicographic on the sorted gap tuples, principal first.
    """
    yield RelativeIdeal(gamma, (0,))
    gaps = gamma.gaps()

    def rec(prefix: Sequence[int], start: int) -> Iterator[RelativeIdeal]:
        for i in range(start, len(gaps)):
            t = gaps[i]
            if any(gamma.contains(t - p) for p in prefix):
                continue
            chosen = tuple(prefix) + (t,)
            yield RelativeIdeal(gamma, (0,) + chosen)
            if max_extra_gens is None or len(chosen) < max_extra_gens:
                yield from rec(chosen, i + 1)

    if max_extra_gens is None or max_extra_gens >= 1:
        yield from rec((), 0)
