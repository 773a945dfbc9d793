"""Shared fixtures: small named tables and the exhaustive order <= 3 corpus."""

from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from semivar import build_semigroup
from semivar.enumeration import CorpusSpec, iter_corpus

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@lru_cache(maxsize=None)
def full_corpus(*orders):
    """Every labeled semigroup of the given orders, built once."""
    return tuple(iter_corpus(CorpusSpec(orders=orders)))


# hand-checked reference tables used all over the suite
LEFT_ZERO = ((0, 0), (1, 1))        # xy = x
RIGHT_ZERO = ((0, 1), (0, 1))       # xy = y
Z2 = ((0, 1), (1, 0))               # group of order 2, identity 0
NULL2 = ((0, 0), (0, 0))            # xy = 0
MIN2 = ((0, 0), (0, 1))             # semilattice: min on {0 < 1}
CHAIN3 = ((0, 0, 0), (0, 1, 1), (0, 1, 2))  # semilattice: min on a 3-chain
NOT_ASSOCIATIVE = ((1, 0), (0, 0))  # (0.0).1 != 0.(0.1)


@pytest.fixture
def left_zero():
    return build_semigroup(2, LEFT_ZERO)


@pytest.fixture
def right_zero():
    return build_semigroup(2, RIGHT_ZERO)


@pytest.fixture
def z2():
    return build_semigroup(2, Z2)


@pytest.fixture
def null2():
    return build_semigroup(2, NULL2)


@pytest.fixture
def min2():
    return build_semigroup(2, MIN2)


@pytest.fixture
def chain3():
    return build_semigroup(3, CHAIN3)


@pytest.fixture(scope="session")
def corpus3():
    """Every labeled semigroup of order 1, 2, 3 (122 tables)."""
    return full_corpus(1, 2, 3)


@pytest.fixture(scope="session")
def corpus2():
    """Every labeled semigroup of order 2 (8 tables)."""
    return full_corpus(2)


def rectangular_band(rows: int, cols: int):
    """The rows x cols rectangular band: (i,j)(k,l) = (i,l)."""
    n = rows * cols
    table = [
        [(x // cols) * cols + (y % cols) for y in range(n)]
        for x in range(n)
    ]
    return build_semigroup(n, table)


def cyclic(n: int):
    """The cyclic group Z_n with identity 0."""
    return build_semigroup(n, [[(x + y) % n for y in range(n)] for x in range(n)])
