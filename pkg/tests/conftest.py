import random
from fractions import Fraction

import pytest

from app.models import AlphaParams, AutomorphismParams

SEED = 20240517


def random_rational(rng: random.Random, nonzero: bool = False, bound: int = 5) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
        if value or not nonzero:
            return value


def random_alpha(rng: random.Random, n: int, leading: int = 2) -> AlphaParams:
    """Random TP parameters whose entries below `leading` are zero."""
    values = [Fraction(0) if t < leading else random_rational(rng) for t in range(2, n + 1)]
    return AlphaParams(n, tuple(values))


def random_automorphism(rng: random.Random, n: int) -> AutomorphismParams:
    return AutomorphismParams((random_rational(rng, nonzero=True),) + tuple(random_rational(rng) for _ in range(n - 1)))


@pytest.fixture
def rng():
    return random.Random(SEED)
