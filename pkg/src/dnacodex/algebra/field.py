"""
GF(2^m) arithmetic through log/antilog tables.

Elements are integers in [0, 2^m); the generator beta is the root of the
table's primitive modulus, so antilog[k] = beta^k.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict

import numpy as np

from dnacodex.algebra.gf2_poly import BinPoly, parse_poly
from dnacodex.utils.errors import DnaCodexError, FieldRangeError
from dnacodex.utils.settings import load_yaml_config

logger = logging.getLogger(__name__)

MIN_FIELD_DEGREE = 1
MAX_FIELD_DEGREE = 20


@lru_cache(maxsize=1)
def primitive_polynomial_table() -> Dict[int, BinPoly]:
    raw = load_yaml_config("primitive_polynomials.yaml")["primitive_polynomials"]
    return {int(m): parse_poly(entry["hex"]) for m, entry in raw.items()}


@dataclass(frozen=True, eq=False)
class FieldContext:
    m: int
    modulus: BinPoly
    log: np.ndarray = field(repr=False)
    antilog: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        """Size of the multiplicative group, 2^m - 1."""
        return (1 << self.m) - 1

    @property
    def size(self) -> int:
        return 1 << self.m

    def element(self, k: int) -> int:
        """beta^k."""
        return int(self.antilog[k % self.order])

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero is undefined")
        return int(self.log[a])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(int(self.log[a]) + int(self.log[b])) % self.order])

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return int(self.antilog[(int(self.log[a]) * e) % self.order])

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.antilog[(-int(self.log[a])) % self.order])


@lru_cache(maxsize=None)
def build_field(m: int) -> FieldContext:
    """Build GF(2^m) from the built-in primitive modulus of degree m.

    m = 1 uses x+1, whose root 1 generates the trivial group of GF(2).
    """
    if not MIN_FIELD_DEGREE <= m <= MAX_FIELD_DEGREE:
        raise FieldRangeError(
            f"GF(2^{m}) is outside the supported range m = {MIN_FIELD_DEGREE}..{MAX_FIELD_DEGREE}"
        )

    modulus = primitive_polynomial_table()[m]
    if modulus.degree != m:
        raise DnaCodexError(f"primitive polynomial table entry for m={m} has degree {modulus.degree}")

    order = (1 << m) - 1
    top = 1 << m
    poly = modulus.bits
    antilog = np.zeros(order, dtype=np.int64)
    value = 1
    for k in range(order):
        antilog[k] = value
        value <<= 1
        if value & top:
            value ^= poly
        if value == 1 and k < order - 1:
            raise DnaCodexError(f"modulus {modulus} is not primitive: its root has order {k + 1}")
    if value != 1:
        raise DnaCodexError(f"modulus {modulus} is not primitive")

    log = np.full(top, -1, dtype=np.int64)
    log[antilog] = np.arange(order, dtype=np.int64)
    antilog.setflags(write=False)
    log.setflags(write=False)

    logger.debug(f"Built GF(2^{m}) with modulus {modulus}")
    return FieldContext(m=m, modulus=modulus, log=log, antilog=antilog)
