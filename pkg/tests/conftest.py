import random
from fractions import Fraction

import pytest

from dortho import DiffOperator, Poly


def rand_rational(rng, lo=-20, hi=20, max_den=8):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_poly(rng, max_deg=12, lo=-20, hi=20, max_den=8):
    deg = rng.randint(-1, max_deg)
    if deg < 0:
        return Poly.zero()
    return Poly([rand_rational(rng, lo, hi, max_den) for _ in range(deg + 1)])


def rand_operator(rng, order=3, lo=-6, hi=6, max_den=4):
    coeffs = []
    for nu in range(order + 1):
        deg = rng.randint(-1, nu)
        if deg < 0:
            coeffs.append(Poly.zero())
        else:
            coeffs.append(
                Poly([rand_rational(rng, lo, hi, max_den) for _ in range(deg + 1)])
            )
    return DiffOperator(coeffs)


@pytest.fixture
def rng():
    return random.Random(20230817)
