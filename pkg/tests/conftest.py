import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mopsrel import Relation23, RecurrencePair, classify, RelationTag


def rel_from7(r1, r2, r3, s1, s2, t2, t3, pad: int = 0) -> Relation23:
    """Relation with the seven classification-relevant coefficients set and
    ``pad`` extra nonzero entries past index 3."""
    extra = [Fraction(1)] * pad
    return Relation23(
        [0, r1, r2, r3] + extra,
        [0, s1, s2, 0] + extra,
        [0, 0, t2, t3] + extra,
    )


def random_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if not nonzero or v != 0:
            return v


def random_gated_instance(rng: random.Random, depth: int):
    """Random (recurrence, relation) with the relation passing the
    non-degeneracy gate and the checkers' nonzero hypotheses."""
    while True:
        r = [Fraction(0)] + [
            random_fraction(rng, nonzero=n >= 3) for n in range(1, depth + 3)
        ]
        s = [Fraction(0)] + [random_fraction(rng) for _ in range(depth + 2)]
        t = [Fraction(0), Fraction(0)] + [
            random_fraction(rng, nonzero=n >= 3) for n in range(2, depth + 3)
        ]
        rel = Relation23(r, s, t)
        if classify(rel).tag is RelationTag.NONDEGENERATE23:
            break
    beta = [random_fraction(rng) for _ in range(depth + 2)]
    gamma = [random_fraction(rng, nonzero=True) for _ in range(depth + 2)]
    return RecurrencePair(beta, gamma), rel


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260818)
