"""
Polynomials over GF(2) packed into Python integers.

The coefficient of x^i lives at bit i, so addition is XOR and
multiplication is carry-less shift-XOR. Values are immutable.
"""

import logging
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Tuple, Union

from dnacodex.utils.errors import PolynomialParseError

logger = logging.getLogger(__name__)

PolyLike = Union["BinPoly", int]

_HEX_RE = re.compile(r"^(0x)?[0-9a-fA-F]+$")
_TERM_RE = re.compile(r"^(?:(?P<one>1)|x(?:\s*(?:\^|\*\*)\s*(?P<exp>\d+))?)$")


def _clmul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    result = 0
    while a:
        low = a & -a
        result ^= b << (low.bit_length() - 1)
        a ^= low
    return result


def _divmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    quotient = 0
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return quotient, a
        quotient |= 1 << shift
        a ^= b << shift


def _bits(p: PolyLike) -> int:
    return p.bits if isinstance(p, BinPoly) else int(p)


@dataclass(frozen=True, slots=True)
class BinPoly:
    """Binary polynomial; `bits` holds the coefficient of x^i at bit i."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient bits must be non-negative")

    @classmethod
    def zero(cls) -> "BinPoly":
        return cls(0)

    @classmethod
    def one(cls) -> "BinPoly":
        return cls(1)

    @classmethod
    def x(cls) -> "BinPoly":
        return cls(2)

    @classmethod
    def monomial(cls, k: int) -> "BinPoly":
        return cls(1 << k)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BinPoly":
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def exponents(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.bits.bit_length()) if self.bits >> i & 1)

    def coefficient(self, i: int) -> int:
        return self.bits >> i & 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    def __add__(self, other: PolyLike) -> "BinPoly":
        return BinPoly(self.bits ^ _bits(other))

    __sub__ = __add__
    __xor__ = __add__
    __radd__ = __add__

    def __mul__(self, other: PolyLike) -> "BinPoly":
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other: PolyLike) -> Tuple["BinPoly", "BinPoly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: PolyLike) -> "BinPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: PolyLike) -> "BinPoly":
        return poly_divmod(self, other)[1]

    def divides(self, other: PolyLike) -> bool:
        return not self.is_zero() and _divmod(_bits(other), self.bits)[1] == 0

    def __str__(self) -> str:
        return to_symbolic(self)

    def __repr__(self) -> str:
        return f"BinPoly({to_symbolic(self)})"


def poly_mul(a: PolyLike, b: PolyLike) -> BinPoly:
    return BinPoly(_clmul(_bits(a), _bits(b)))


def poly_product(polys: Iterable[PolyLike]) -> BinPoly:
    return reduce(poly_mul, polys, BinPoly.one())


def poly_divmod(a: PolyLike, b: PolyLike) -> Tuple[BinPoly, BinPoly]:
    """Return (q, r) with a = q*b + r and deg r < deg b.

    Raises ZeroDivisionError when b is the zero polynomial.
    """
    q, r = _divmod(_bits(a), _bits(b))
    return BinPoly(q), BinPoly(r)


def poly_gcd(a: PolyLike, b: PolyLike) -> BinPoly:
    x, y = _bits(a), _bits(b)
    while y:
        x, y = y, _divmod(x, y)[1]
    return BinPoly(x)


def poly_lcm(a: PolyLike, b: PolyLike) -> BinPoly:
    g = poly_gcd(a, b)
    if g.is_zero():
        return BinPoly.zero()
    return poly_divmod(poly_mul(a, b), g)[0]


def poly_powmod(base: PolyLike, exponent: int, modulus: PolyLike) -> BinPoly:
    """base^exponent reduced modulo `modulus` by square-and-multiply."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    m = _bits(modulus)
    result = _divmod(1, m)[1]
    square = _divmod(_bits(base), m)[1]
    while exponent:
        if exponent & 1:
            result = _divmod(_clmul(result, square), m)[1]
        square = _divmod(_clmul(square, square), m)[1]
        exponent >>= 1
    return BinPoly(result)


def poly_eval_mod(f: PolyLike, point: PolyLike, modulus: PolyLike) -> BinPoly:
    """Evaluate f at `point` in GF(2)[x]/(modulus) by Horner's rule."""
    bits, r, m = _bits(f), _bits(point), _bits(modulus)
    acc = 0
    for i in range(bits.bit_length() - 1, -1, -1):
        acc = _divmod(_clmul(acc, r), m)[1] ^ (bits >> i & 1)
    return BinPoly(_divmod(acc, m)[1])


def reciprocal(f: PolyLike) -> BinPoly:
    """f*(x) = x^deg(f) f(1/x): coefficients reversed down to deg f."""
    bits = _bits(f)
    if bits == 0:
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return BinPoly(int(f"{bits:b}"[::-1], 2))


def is_self_reciprocal(f: PolyLike) -> bool:
    return reciprocal(f).bits == _bits(f)


def reciprocal_product_identity_check(f: PolyLike, g: PolyLike) -> bool:
    """(fg)* == f* g*; holds for every pair of nonzero polynomials."""
    return reciprocal(poly_mul(f, g)) == poly_mul(reciprocal(f), reciprocal(g))


def reciprocal_sum_identity_check(f: PolyLike, g: PolyLike) -> bool:
    """(f+g)* == f* + x^(deg f - deg g) g*.

    The identity needs deg(f+g) = deg f, which holds whenever deg f > deg g.
    Pairs outside that case raise ValueError.
    """
    f, g = BinPoly(_bits(f)), BinPoly(_bits(g))
    if f.is_zero() or g.is_zero():
        raise ValueError("both polynomials must be nonzero")
    total = f + g
    if total.degree != f.degree:
        raise ValueError("identity requires deg(f + g) == deg f")
    shifted = BinPoly(reciprocal(g).bits << (f.degree - g.degree))
    return reciprocal(total) == reciprocal(f) + shifted


def xn_minus_one(n: int) -> BinPoly:
    return BinPoly((1 << n) | 1)


def all_ones(n: int) -> BinPoly:
    """I(x) = 1 + x + ... + x^(n-1) = (x^n - 1)/(x - 1)."""
    return BinPoly((1 << n) - 1)


def to_hex(f: PolyLike) -> str:
    """Little-endian coefficient bitstring as hex, e.g. x^3+x+1 -> '0b'."""
    text = f"{_bits(f):x}"
    return text.zfill(len(text) + len(text) % 2)


def to_symbolic(f: PolyLike) -> str:
    bits = _bits(f)
    if bits == 0:
        return "0"
    terms = []
    for i in range(bits.bit_length() - 1, -1, -1):
        if bits >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def parse_poly(text: Union[str, int, BinPoly]) -> BinPoly:
    """Accept 'x^6+x^3+1', 'x**2 + x', '0b' or '0x49'.

    Strings of hex digits are read as hex; anything containing x terms is
    read symbolically. Repeated terms cancel, as they would over GF(2).
    """
    if isinstance(text, BinPoly):
        return text
    if isinstance(text, int):
        if text < 0:
            raise PolynomialParseError(f"negative coefficient mask: {text}")
        return BinPoly(text)
    cleaned = text.strip()
    if not cleaned:
        raise PolynomialParseError("empty polynomial string")
    if _HEX_RE.match(cleaned):
        return BinPoly(int(cleaned, 16))

    bits = 0
    for raw in cleaned.split("+"):
        term = raw.strip()
        if term == "0":
            continue
        match = _TERM_RE.match(term)
        if not match:
            raise PolynomialParseError(f"cannot parse term '{term}' in '{text}'")
        if match.group("one"):
            bits ^= 1
        else:
            exp = match.group("exp")
            bits ^= 1 << (int(exp) if exp is not None else 1)
    return BinPoly(bits)
