"""
Minimal polynomials and the factorization of x^n - 1 over GF(2).

Two routes produce the factors M_i, keyed by coset representative:

* ord_n(2) <= 20: expand prod (x - alpha^j) over each coset in GF(2^m),
  with alpha = beta^((2^m - 1)/n) and beta the table generator.
* otherwise: split x^n - 1 with the coset idempotents
  theta_C(x) = sum of x^c over C, then label each factor by the root
  relation M_i(x^i mod M_1) = 0 mod M_1.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from dnacodex.algebra.cyclotomic import CosetTable, build_cosets
from dnacodex.algebra.field import MAX_FIELD_DEGREE, FieldContext, build_field
from dnacodex.algebra.gf2_poly import (
    BinPoly,
    poly_eval_mod,
    poly_gcd,
    poly_powmod,
    poly_product,
    xn_minus_one,
)
from dnacodex.utils.errors import DnaCodexError, RefusedConstruction

logger = logging.getLogger(__name__)


def minimal_polynomial(n: int, coset: Iterable[int], ctx: FieldContext) -> BinPoly:
    """prod over j in coset of (x - alpha^j), alpha = beta^((2^m - 1)/n)."""
    if n < 1 or n % 2 == 0:
        raise RefusedConstruction(f"length {n} must be odd and positive")
    if ctx.order % n:
        raise ValueError(f"GF(2^{ctx.m}) has no element of order {n}: {n} does not divide {ctx.order}")

    members = sorted(set(coset))
    member_set = set(members)
    if not members or any(not 0 <= i < n for i in members):
        raise ValueError(f"coset {members} is not a subset of Z/{n}")
    if any(2 * i % n not in member_set for i in members):
        raise ValueError(f"coset {members} is not closed under doubling mod {n}")

    step = ctx.order // n
    coeffs = [1]
    for j in members:
        root = ctx.element(j * step)
        shifted = [0] + coeffs
        for d, c in enumerate(coeffs):
            shifted[d] ^= ctx.mul(c, root)
        coeffs = shifted

    if any(c > 1 for c in coeffs):
        raise ValueError(f"coset {members} does not yield a binary polynomial")
    return BinPoly(sum(1 << d for d, c in enumerate(coeffs) if c))


def _prime_factors(n: int) -> List[int]:
    primes, p = [], 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def has_primitive_roots(f: BinPoly, n: int) -> bool:
    """True when the roots of irreducible f have order exactly n."""
    if not f.divides(xn_minus_one(n)):
        return False
    return all(poly_gcd(f, xn_minus_one(n // p)).degree == 0 for p in _prime_factors(n))


def split_by_idempotents(n: int, table: Optional[CosetTable] = None) -> List[BinPoly]:
    """Irreducible factors of x^n - 1, unlabeled, via gcds with coset idempotents."""
    table = table or build_cosets(n)
    target = len(table.cosets)
    parts = [xn_minus_one(n)]
    for coset in table.cosets:
        if len(parts) == target:
            break
        theta = BinPoly.from_exponents(coset)
        refined = []
        for part in parts:
            g = poly_gcd(part, theta % part)
            if g.degree in (0, part.degree):
                refined.append(part)
            else:
                refined.extend([g, part // g])
        parts = refined
    if len(parts) != target:
        raise DnaCodexError(f"idempotent splitting of x^{n}-1 produced {len(parts)} parts, expected {target}")
    return parts


def label_factors(
    n: int,
    factors: Iterable[BinPoly],
    table: Optional[CosetTable] = None,
    m1: Optional[BinPoly] = None,
) -> Dict[int, BinPoly]:
    """Key each irreducible factor by the representative of its coset.

    M_1 defaults to the numerically smallest factor whose roots are
    primitive n-th roots of unity; M_i is then the factor vanishing at
    x^i in GF(2)[x]/(M_1).
    """
    table = table or build_cosets(n)
    pool = list(factors)
    if n == 1:
        return {0: pool[0]}

    if m1 is None:
        candidates = sorted(
            (f for f in pool if f.degree == table.ord2 and has_primitive_roots(f, n)),
            key=int,
        )
        if not candidates:
            raise DnaCodexError(f"no factor of x^{n}-1 has primitive {n}-th roots")
        m1 = candidates[0]

    labeled: Dict[int, BinPoly] = {}
    for coset in table.cosets:
        point = poly_powmod(BinPoly.x(), coset[0], m1)
        matches = [
            f for f in pool
            if f.degree == len(coset) and poly_eval_mod(f, point, m1).is_zero()
        ]
        if len(matches) != 1:
            raise DnaCodexError(f"coset {coset[0]} mod {n} matched {len(matches)} factors")
        labeled[coset[0]] = matches[0]
    return labeled


@lru_cache(maxsize=None)
def _factor_xn1(n: int) -> Tuple[Tuple[int, BinPoly], ...]:
    table = build_cosets(n)
    if table.ord2 <= MAX_FIELD_DEGREE:
        ctx = build_field(table.ord2)
        pairs = tuple((c[0], minimal_polynomial(n, c, ctx)) for c in table.cosets)
    else:
        logger.debug(f"ord_{n}(2) = {table.ord2} exceeds the field table; splitting by idempotents")
        pairs = tuple(label_factors(n, split_by_idempotents(n, table), table).items())
    return pairs


def factor_xn1(n: int) -> Dict[int, BinPoly]:
    """Irreducible factors of x^n - 1 keyed by coset representative, in order."""
    return dict(_factor_xn1(n))


def product_of_cosets(n: int, representatives: Sequence[int]) -> BinPoly:
    """Product of M_r over distinct coset representatives r."""
    factors = factor_xn1(n)
    table = build_cosets(n)
    reps = sorted({table.coset_of(r)[0] for r in representatives})
    return poly_product(factors[r] for r in reps)


def divisors_of_xn1(n: int) -> List[BinPoly]:
    """Every monic divisor of x^n - 1, one per subset of its irreducible factors."""
    factors = list(factor_xn1(n).values())
    divisors = [BinPoly.one()]
    for f in factors:
        divisors += [d * f for d in divisors]
    return sorted(divisors, key=lambda d: (d.degree, int(d)))
