"""Numerical semigroups: membership, Frobenius number, genus, symmetry,
Apery sets and delta sets.

A numerical semigroup is a cofinite additive submonoid of the non-negative
integers.  The whole of N is encoded with frobenius = -1 so that degenerate
cases fall out cleanly downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    EmptyGenerators,
    InternalInconsistency,
    ModulusNotInSemigroup,
    NonStabilized,
    NotCoprime,
)


@dataclass(frozen=True)
class AperySet:
    """One minimal element per residue class modulo `modulus`."""

    modulus: int
    elements: frozenset[int]

    def sorted(self) -> list[int]:
        return sorted(self.elements)


@dataclass(frozen=True)
class NumericalSemigroup:
    minimal_generators: tuple[int, ...]
    frobenius: int
    genus: int
    # members in [0, frobenius]; everything above the bound is a member
    members: frozenset[int] = field(repr=False, compare=False, hash=False)

    @staticmethod
    def from_generators(gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise EmptyGenerators("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise NotCoprime(f"gcd({gens}) != 1; not a numerical semigroup")

        if gens[0] == 1:
            return NumericalSemigroup((1,), -1, 0, frozenset())

        # shortest member per residue class mod the multiplicity (Bellman-Ford
        # on the residue graph); from it Frobenius, genus and the member table
        m = gens[0]
        ap: list[int | None] = [None] * m
        ap[0] = 0
        changed = True
        while changed:
            changed = False
            for r in range(m):
                base = ap[r]
                if base is None:
                    continue
                for g in gens:
                    cand = base + g
                    nr = cand % m
                    if ap[nr] is None or cand < ap[nr]:
                        ap[nr] = cand
                        changed = True
        apery = [int(x) for x in ap]  # type: ignore[arg-type]
        frobenius = max(apery) - m
        genus = sum((apery[r] - r) // m for r in range(1, m))
        members = frozenset(
            x for x in range(frobenius + 1) if apery[x % m] <= x
        )

        def _contains(x: int) -> bool:
            return x > frobenius if (x < 0 or x > frobenius) else x in members

        minimal = tuple(
            g
            for g in gens
            if not any(
                _contains(a) and _contains(g - a) for a in range(m, g - m + 1)
            )
        )
        return NumericalSemigroup(minimal, frobenius, genus, members)

    # -- basic queries -----------------------------------------------------

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return x in self.members

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def is_nat(self) -> bool:
        return self.frobenius == -1

    def gaps(self) -> tuple[int, ...]:
        return tuple(
            x for x in range(self.frobenius + 1) if x not in self.members
        )

    def members_up_to(self, hi: int) -> list[int]:
        """All members in [0, hi]."""
        return [x for x in range(hi + 1) if self.contains(x)]

    def iter_members(self) -> Iterator[int]:
        x = 0
        while True:
            if self.contains(x):
                yield x
            x += 1

    def is_symmetric(self) -> bool:
        """Genus criterion, double-checked against the complement criterion."""
        if self.is_nat():
            return True
        by_genus = 2 * self.genus == self.frobenius + 1
        by_complement = all(
            self.contains(x) != self.contains(self.frobenius - x)
            for x in range(self.frobenius + 1)
        )
        if by_genus != by_complement:
            raise InternalInconsistency(
                f"symmetry criteria disagree on {self.minimal_generators}"
            )
        return by_genus

    def apery(self, z: int) -> AperySet:
        if z <= 0 or not self.contains(z):
            raise ModulusNotInSemigroup(
                f"{z} is not a nonzero member of the semigroup"
            )
        elements = set()
        for r in range(z):
            x = r
            while not self.contains(x):
                x += z
            elements.add(x)
        return AperySet(z, frozenset(elements))

    def to_json(self) -> dict:
        return {
            "generators": list(self.minimal_generators),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "symmetric": self.is_symmetric(),
        }


def delta_set(values: Iterable[int]) -> frozenset[int]:
    """All positive pairwise differences of a finite set."""
    vals = sorted(set(values))
    return frozenset(
        vals[j] - vals[i] for i in range(len(vals)) for j in range(i + 1, len(vals))
    )


def stable_delta_intersection(gamma: NumericalSemigroup) -> frozenset[int]:
    """Intersection of delta sets of Apery sets over nonzero members.

    Members are traversed up to 2*F + max generator; the result must be
    unchanged over the last `multiplicity` consecutive members, otherwise
    NonStabilized is raised.
    """
    if gamma.is_nat():
        return frozenset()
    bound = 2 * gamma.frobenius + max(gamma.minimal_generators)
    guard = gamma.multiplicity
    inter: frozenset[int] | None = None
    unchanged = 0
    for a in range(1, bound + 1):
        if not gamma.contains(a):
            continue
        d = delta_set(gamma.apery(a).elements)
        nxt = d if inter is None else inter & d
        unchanged = unchanged + 1 if nxt == inter else 0
        inter = nxt
    if inter is None or unchanged < guard:
        raise NonStabilized(
            f"delta-set intersection did not stabilize within bound {bound}"
        )
    return inter
