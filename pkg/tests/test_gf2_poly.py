import pytest

from dnacodex.algebra.field import primitive_polynomial_table
from dnacodex.algebra.gf2_poly import (
    BinPoly,
    all_ones,
    is_self_reciprocal,
    parse_poly,
    poly_divmod,
    poly_eval_mod,
    poly_gcd,
    poly_lcm,
    poly_powmod,
    poly_product,
    reciprocal,
    reciprocal_product_identity_check,
    reciprocal_sum_identity_check,
    to_hex,
    to_symbolic,
    xn_minus_one,
)
from dnacodex.utils.errors import PolynomialParseError


@pytest.mark.parametrize("text, bits", [
    ("x^3+x+1", 0b1011),
    ("0b", 0b1011),
    ("0x0b", 0b1011),
    ("x**2 + x", 0b110),
    ("1", 1),
    ("x", 0b10),
    ("x+x", 0),
    ("x^6 + x^3 + 1", 0b1001001),
])
def test_parse_poly(text, bits):
    assert parse_poly(text) == BinPoly(bits)


def test_parse_poly_passes_through_ints_and_polys():
    assert parse_poly(11) == BinPoly(11)
    assert parse_poly(BinPoly(5)) == BinPoly(5)


@pytest.mark.parametrize("text", ["", "y^2+1", "x^a", "x^2-1", "2x"])
def test_parse_poly_rejects_garbage(text):
    with pytest.raises(PolynomialParseError):
        parse_poly(text)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_poly("x^^2")


def test_formatting():
    f = BinPoly(0b1011)
    assert to_hex(f) == "0b"
    assert to_symbolic(f) == "x^3+x+1"
    assert str(f) == "x^3+x+1"
    assert to_symbolic(BinPoly.zero()) == "0"
    assert to_symbolic(BinPoly.one()) == "1"
    assert to_hex(0x11d) == "011d"
    assert parse_poly(to_hex(f)) == f
    assert parse_poly(to_symbolic(f)) == f


def test_degree_and_weight():
    assert BinPoly.zero().degree is None
    assert BinPoly.one().degree == 0
    assert BinPoly(0b1011).degree == 3
    assert BinPoly(0b1011).weight == 3
    assert BinPoly(0b1011).exponents() == (0, 1, 3)
    assert BinPoly.from_exponents([0, 1, 3, 3]) == BinPoly(0b11)


def test_arithmetic():
    a, b = BinPoly(0b11), BinPoly(0b111)
    assert a + a == BinPoly.zero()
    assert a * b == BinPoly(0b1001)
    q, r = poly_divmod(0b1001, 0b11)
    assert (q, r) == (BinPoly(0b111), BinPoly.zero())
    assert BinPoly(0b1001) // a == b
    assert BinPoly(0b1000) % BinPoly(0b1011) == BinPoly(0b11)
    assert a.divides(0b1001)
    assert not BinPoly.zero().divides(0b1001)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(0b101, 0)


def test_gcd_and_lcm():
    # x^2+1 = (x+1)^2 and x^3+1 = (x+1)(x^2+x+1)
    assert poly_gcd(0b101, 0b1001) == BinPoly(0b11)
    assert poly_lcm(0b101, 0b1001) == BinPoly(0b101) * BinPoly(0b111)
    assert poly_lcm(0, 0b11) == BinPoly.zero()


def test_powmod_and_eval():
    # x has order 7 modulo the primitive x^3+x+1
    assert poly_powmod(BinPoly.x(), 7, 0b1011) == BinPoly.one()
    assert poly_powmod(BinPoly.x(), 3, 0b1011) == BinPoly(0b11)
    assert poly_eval_mod(0b1011, BinPoly.x(), 0b1011).is_zero()
    assert not poly_eval_mod(0b1101, BinPoly.x(), 0b1011).is_zero()


def test_reciprocal():
    assert reciprocal(0b1011) == BinPoly(0b1101)
    assert reciprocal(0b110) == BinPoly(0b11)
    assert is_self_reciprocal(0b111)
    assert not is_self_reciprocal(0b1011)
    with pytest.raises(ValueError):
        reciprocal(0)


@pytest.mark.parametrize("f, g", [(0b1011, 0b111), (0b110, 0b11), (0x11d, 0b1101), (1, 0b101)])
def test_reciprocal_product_identity(f, g):
    assert reciprocal_product_identity_check(f, g)


@pytest.mark.parametrize("f, g", [(0b1011, 0b11), (0x11d, 0b1101), (0b10011, 0b1)])
def test_reciprocal_sum_identity(f, g):
    assert reciprocal_sum_identity_check(f, g)


def test_reciprocal_sum_identity_needs_leading_term():
    with pytest.raises(ValueError):
        reciprocal_sum_identity_check(0b1011, 0b1101)


def test_special_polynomials():
    assert xn_minus_one(7) == BinPoly(0b10000001)
    assert all_ones(3) == BinPoly(0b111)
    assert all_ones(5) * BinPoly(0b11) == xn_minus_one(5)
    assert poly_product([]) == BinPoly.one()


def test_primitive_table_against_galois():
    galois = pytest.importorskip("galois")
    for m, f in primitive_polynomial_table().items():
        if m == 1:
            continue
        assert f.degree == m
        assert galois.Poly.Int(f.bits).is_primitive(), f"m={m}: {f}"
