"""Shared helpers: random rational vectors and independent brute-force oracles.

The oracles deliberately avoid the production code paths: admissibility is
re-derived from the raw min >= size condition over power sets, so the greedy
norm, the enumerators, and the certification logic are checked against
arithmetic that cannot share their bugs.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from schreier.vectors import Vector, norm


def powerset_admissible(N):
    """All admissible subsets of [1, N] straight from the definition."""
    universe = list(range(1, N + 1))
    out = [()]
    for size in range(1, N + 1):
        for cand in combinations(universe, size):
            if cand[0] >= size:
                out.append(cand)
    return out


def brute_norm(x: Vector) -> Fraction:
    """Independent norm oracle: maximize |x| sums over the raw power set."""
    best = Fraction(0)
    for F in powerset_admissible(x.max_index):
        total = sum((abs(x[i]) for i in F), Fraction(0))
        if total > best:
            best = total
    return best


def random_fraction(rng, max_num=100, max_den=100, allow_zero=True):
    num = rng.randint(-max_num, max_num)
    if not allow_zero and num == 0:
        num = 1
    return Fraction(num, rng.randint(1, max_den))


def random_vector(rng, max_index=10, density=0.6, max_num=100, max_den=100) -> Vector:
    coords = {}
    for i in range(1, max_index + 1):
        if rng.random() < density:
            q = random_fraction(rng, max_num, max_den)
            if q != 0:
                coords[i] = q
    return Vector(coords)


def random_unit_vector(rng, max_index=6, density=0.6) -> Vector:
    while True:
        v = random_vector(rng, max_index, density, max_num=20, max_den=20)
        if v:
            return v / norm(v, 1).value


@pytest.fixture
def rng():
    return random.Random(20240809)
