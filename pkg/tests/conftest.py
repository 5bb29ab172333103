"""Shared brute-force oracles and randomized instance generators.

The oracles here deliberately avoid the library's own data structures so
that test expectations are computed along an independent path.
"""

from __future__ import annotations

import math
import random

import pytest

from hwsg import NumericalSemigroup, RelativeIdeal, glue


# -- independent oracles -------------------------------------------------


def oracle_member_flags(gens: list[int], bound: int) -> list[bool]:
    """Dynamic-programming reachability table over [0, bound]."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for x in range(bound + 1):
        if reach[x]:
            for g in gens:
                if x + g <= bound:
                    reach[x + g] = True
    return reach


def oracle_frobenius(gens: list[int]) -> int:
    bound = max(gens) ** 2
    reach = oracle_member_flags(gens, bound)
    gaps = [x for x in range(bound + 1) if not reach[x]]
    return gaps[-1] if gaps else -1


def oracle_gaps(gens: list[int]) -> list[int]:
    bound = max(gens) ** 2
    reach = oracle_member_flags(gens, bound)
    return [x for x in range(bound + 1) if not reach[x]]


def oracle_ideal_members(
    gamma: NumericalSemigroup, gens: list[int], hi: int
) -> set[int]:
    """Members of (gens) + Gamma up to hi, by raw set addition."""
    reach = hi - min(gens)  # semigroup members needed to reach hi from any gen
    sg = [x for x in range(max(reach, 0) + 1) if gamma.contains(x)]
    return {g + m for g in gens for m in sg if g + m <= hi}


def oracle_genus_census(max_genus: int) -> dict[int, int]:
    """Count numerical semigroups per genus by exhaustive search over gap
    subsets of [1, 2*max_genus - 1]."""
    import itertools

    top = max(2 * max_genus - 1, 1)
    counts = {g: 0 for g in range(max_genus + 1)}
    counts[0] = 1  # the whole of N
    universe = list(range(1, top + 1))
    for size in range(1, max_genus + 1):
        for gaps in itertools.combinations(universe, size):
            gapset = set(gaps)
            frob = gaps[-1]
            closed = all(
                (a + b) not in gapset
                for a in range(1, frob)
                if a not in gapset
                for b in range(a, frob - a + 1)
                if b not in gapset
            )
            if closed:
                counts[size] += 1
    return counts


def oracle_symmetric_gapsets(frobenius: int) -> list[frozenset[int]]:
    """Gap sets of symmetric semigroups with the given Frobenius number,
    via the complement-pairing characterization."""
    import itertools

    assert frobenius % 2 == 1
    out = []
    half = [x for x in range(1, (frobenius + 1) // 2)]
    # a symmetric gap set is determined by choosing, per pair {x, F-x},
    # which side is the gap; then closure must hold
    for picks in itertools.product([0, 1], repeat=len(half)):
        gaps = {frobenius}
        for x, pick in zip(half, picks):
            gaps.add(x if pick == 0 else frobenius - x)
        members = [x for x in range(frobenius) if x not in gaps]
        closed = all(
            (a + b) not in gaps
            for a in members
            for b in members
            if a and b and a + b <= frobenius
        )
        if closed:
            out.append(frozenset(gaps))
    return out


# -- randomized instances ------------------------------------------------

SMALL_GEN_SETS = [
    [2, 3],
    [2, 5],
    [3, 5],
    [3, 4],
    [2, 7],
    [3, 7],
    [4, 5],
    [4, 7],
    [5, 6],
    [3, 5, 7],
    [4, 5, 6],
    [4, 6, 9],
    [5, 7, 9],
    [6, 10, 15],
]

SYMMETRIC_GEN_SETS = [
    g for g in SMALL_GEN_SETS if NumericalSemigroup.from_generators(g).is_symmetric()
]


def random_semigroup(rng: random.Random) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(rng.choice(SMALL_GEN_SETS))


def random_ideal(rng: random.Random, gamma: NumericalSemigroup) -> RelativeIdeal:
    hi = max(gamma.frobenius, 1) + 3
    count = rng.randint(1, 3)
    gens = [rng.randint(-4, hi) for _ in range(count)]
    return RelativeIdeal.from_generators(gamma, gens)


def random_gluing(rng: random.Random, symmetric_only: bool = False):
    pool = SYMMETRIC_GEN_SETS if symmetric_only else SMALL_GEN_SETS
    pool = pool + [[1]]
    while True:
        g1 = NumericalSemigroup.from_generators(rng.choice(pool))
        g2 = NumericalSemigroup.from_generators(rng.choice(pool))
        a1_opts = [a for a in range(2, 10) if g2.contains(a)]
        a2_opts = [a for a in range(2, 10) if g1.contains(a)]
        if not a1_opts or not a2_opts:
            continue
        a1 = rng.choice(a1_opts)
        a2 = rng.choice(a2_opts)
        if math.gcd(a1, a2) != 1:
            continue
        return glue(g1, a1, g2, a2)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
