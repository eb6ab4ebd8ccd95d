import pytest

from dnacodex.algebra.gf2_poly import all_ones
from dnacodex.codes.cyclic_code import make_code
from dnacodex.codes.families import simplex_dna, zetterberg_dna

SMALL_BUDGET = 16


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep DNACODEX_* settings from the developer shell out of the tests."""
    monkeypatch.delenv("DNACODEX_BUDGET", raising=False)
    monkeypatch.delenv("DNACODEX_THREADS", raising=False)


@pytest.fixture
def budget():
    return SMALL_BUDGET


@pytest.fixture
def hamming_7_4():
    """<x^3+x+1 | u(x^3+x+1)>, the free code over the [7,4,3] Hamming code."""
    return make_code(7, "x^3+x+1", "x^3+x+1")


@pytest.fixture
def rc_code_15():
    """<I(x) | u(x^2+x+1)>: both generators self-reciprocal and x^2+x+1 divides I(x)."""
    return make_code(15, all_ones(15), "x^2+x+1")


@pytest.fixture
def simplex_4():
    return simplex_dna(4)


@pytest.fixture
def zetterberg_3():
    return zetterberg_dna(3)
