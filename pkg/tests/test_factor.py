import itertools

import pytest

from dnacodex.algebra.cyclotomic import build_cosets
from dnacodex.algebra.factor import (
    divisors_of_xn1,
    factor_xn1,
    has_primitive_roots,
    label_factors,
    minimal_polynomial,
    product_of_cosets,
    split_by_idempotents,
)
from dnacodex.algebra.field import build_field
from dnacodex.algebra.gf2_poly import BinPoly, is_self_reciprocal, parse_poly, poly_gcd, poly_product, xn_minus_one


def test_factors_of_x7_minus_1():
    assert factor_xn1(7) == {0: parse_poly("x+1"), 1: parse_poly("x^3+x+1"), 3: parse_poly("x^3+x^2+1")}


def test_factors_of_x15_minus_1():
    factors = factor_xn1(15)
    assert factors[1] == parse_poly("x^4+x+1")
    assert factors[3] == parse_poly("x^4+x^3+x^2+x+1")
    assert factors[5] == parse_poly("x^2+x+1")
    assert factors[7] == parse_poly("x^4+x^3+1")


@pytest.mark.parametrize("n", [1, 3, 7, 9, 15, 21, 43, 63, 65, 127, 255])
def test_factors_multiply_back(n):
    factors = factor_xn1(n)
    table = build_cosets(n)
    assert list(factors) == list(table.representatives)
    assert poly_product(factors.values()) == xn_minus_one(n)
    for rep, f in factors.items():
        assert f.degree == len(table.coset_of(rep))
        assert is_self_reciprocal(f) == table.is_reversible(rep)


def test_63_has_13_factors():
    assert len(factor_xn1(63)) == 13


@pytest.mark.parametrize("n", [47, 53, 141])
def test_idempotent_route_beyond_field_table(n):
    # ord_n(2) is 23, 52 and 46: no log table covers these
    factors = factor_xn1(n)
    assert poly_product(factors.values()) == xn_minus_one(n)
    assert has_primitive_roots(factors[1], n)


def test_both_routes_agree():
    n = 63
    table = build_cosets(n)
    labeled = label_factors(n, split_by_idempotents(n, table), table, m1=factor_xn1(n)[1])
    assert labeled == factor_xn1(n)


def test_factors_are_irreducible():
    galois = pytest.importorskip("galois")
    for n in (63, 65, 47):
        for f in factor_xn1(n).values():
            assert galois.Poly.Int(f.bits).is_irreducible(), f"n={n}: {f}"


def test_minimal_polynomial_rejects_bad_cosets():
    ctx = build_field(4)
    with pytest.raises(ValueError):
        minimal_polynomial(15, [1, 2], ctx)
    with pytest.raises(ValueError):
        minimal_polynomial(7, [1, 2, 4], ctx)


def test_product_of_cosets():
    factors = factor_xn1(15)
    assert product_of_cosets(15, [1, 6]) == factors[1] * factors[3]
    assert product_of_cosets(15, []) == BinPoly.one()


def test_divisors():
    divisors = divisors_of_xn1(7)
    assert len(divisors) == 8
    assert divisors[0] == BinPoly.one()
    assert divisors[-1] == xn_minus_one(7)
    assert all(d.divides(xn_minus_one(7)) for d in divisors)


@pytest.mark.slow
def test_factorization_of_every_odd_length_up_to_255():
    for n in range(1, 256, 2):
        factors = factor_xn1(n)
        assert poly_product(factors.values()) == xn_minus_one(n), n
        assert len(factors) == len(build_cosets(n).cosets), n
        for f, g in itertools.combinations(factors.values(), 2):
            assert poly_gcd(f, g) == BinPoly.one(), n
