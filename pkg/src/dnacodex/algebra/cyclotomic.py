"""
2-cyclotomic cosets modulo an odd n.

Cl(i) = {i, 2i, 4i, ...} mod n. A coset is reversible when it is closed
under negation, which is exactly when its minimal polynomial is
self-reciprocal.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

from dnacodex.utils.errors import RefusedConstruction

logger = logging.getLogger(__name__)


def require_odd_length(n: int) -> None:
    if n < 1:
        raise RefusedConstruction(f"length must be a positive odd integer, got {n}")
    if n % 2 == 0:
        raise RefusedConstruction(
            f"length {n} is even; only odd lengths give a separable x^n - 1 over GF(2)"
        )


def multiplicative_order(n: int) -> int:
    """Smallest k >= 1 with 2^k = 1 mod n (n odd)."""
    require_odd_length(n)
    k, value = 1, 2 % n
    while value != 1 % n:
        value = value * 2 % n
        k += 1
    return k


def binary_weight(s: int) -> int:
    """w_2(s), the number of ones in the binary expansion of s."""
    return int(s).bit_count()


@dataclass(frozen=True)
class CosetTable:
    n: int
    cosets: Tuple[Tuple[int, ...], ...]
    reversible: Tuple[bool, ...]
    ord2: int
    _index: Tuple[int, ...] = field(repr=False, compare=False)

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def index_of(self, i: int) -> int:
        return self._index[i % self.n]

    def coset_of(self, i: int) -> Tuple[int, ...]:
        return self.cosets[self.index_of(i)]

    def is_reversible(self, i: int) -> bool:
        return self.reversible[self.index_of(i)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "ord2": self.ord2,
            "cosets": [
                {"rep": c[0], "members": list(c), "reversible": r}
                for c, r in zip(self.cosets, self.reversible)
            ],
        }


@lru_cache(maxsize=None)
def build_cosets(n: int) -> CosetTable:
    require_odd_length(n)

    index = [-1] * n
    cosets = []
    for start in range(n):
        if index[start] >= 0:
            continue
        members = []
        i = start
        while index[i] < 0:
            index[i] = len(cosets)
            members.append(i)
            i = 2 * i % n
        cosets.append(tuple(sorted(members)))

    reversible = tuple(index[(-c[0]) % n] == k for k, c in enumerate(cosets))
    ord2 = len(cosets[index[1 % n]]) if n > 1 else 1

    logger.debug(f"n={n}: {len(cosets)} cyclotomic cosets, ord_n(2)={ord2}")
    return CosetTable(
        n=n,
        cosets=tuple(cosets),
        reversible=reversible,
        ord2=ord2,
        _index=tuple(index),
    )


def has_power_minus_one(n: int) -> Optional[int]:
    """Smallest i >= 1 with 2^i = -1 mod n, or None when -1 is not a power of 2."""
    require_odd_length(n)
    if n < 3:
        return None
    value = 1
    for i in range(1, multiplicative_order(n) + 1):
        value = value * 2 % n
        if value == n - 1:
            return i
    return None


def find_reversible_coset(n: int) -> Optional[Tuple[int, ...]]:
    """First nonzero reversible coset in representative order."""
    table = build_cosets(n)
    for coset, rev in zip(table.cosets, table.reversible):
        if coset[0] != 0 and rev:
            return coset
    return None
