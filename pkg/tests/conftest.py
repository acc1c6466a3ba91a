import random
from fractions import Fraction

import pytest

from cgv.geometry import build_cubics
from cgv.nf import NFElem

# the real root of x^3 + x^2 - 1, for float cross-checks in tests only
R_FLOAT = 0.7548776662466928


@pytest.fixture(scope="session")
def family():
    return build_cubics()


def nf_to_float(a: NFElem) -> float:
    return float(a.c0) + float(a.c1) * R_FLOAT + float(a.c2) * R_FLOAT ** 2


def random_fraction(rng: random.Random, span: int = 30, den: int = 10) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_nfelem(rng: random.Random, span: int = 30, den: int = 10) -> NFElem:
    return NFElem(*(random_fraction(rng, span, den) for _ in range(3)))


def random_nfelem_nonzero(rng: random.Random) -> NFElem:
    while True:
        a = random_nfelem(rng)
        if not a.is_zero():
            return a
