"""Binary cyclic codes <g(x)> of length n: the residue and torsion codes."""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from dnacodex.algebra.gf2_poly import BinPoly, reciprocal, to_symbolic, xn_minus_one
from dnacodex.codes.enumeration import min_nonzero_weight, pack_ints, span_rows, weight_histogram
from dnacodex.codes.weight_enumerator import WeightEnumerator
from dnacodex.utils.errors import BudgetExceeded, RefusedConstruction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryCyclicCode:
    n: int
    generator: BinPoly

    def __post_init__(self):
        if not self.generator.divides(xn_minus_one(self.n)):
            raise RefusedConstruction(f"{to_symbolic(self.generator)} does not divide x^{self.n}-1")

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree

    @property
    def check_polynomial(self) -> BinPoly:
        return xn_minus_one(self.n) // self.generator

    @property
    def is_zero_code(self) -> bool:
        return self.dimension == 0

    def basis_ints(self) -> List[int]:
        """Shifts g, xg, ..., x^(k-1) g as coefficient masks."""
        return [self.generator.bits << i for i in range(self.dimension)]

    def basis_rows(self) -> np.ndarray:
        return pack_ints(self.basis_ints(), self.n)

    def contains(self, bits: int) -> bool:
        return 0 <= bits < (1 << self.n) and (BinPoly(bits) % self.generator).is_zero()

    def dual(self) -> "BinaryCyclicCode":
        """The dual code, generated by the reciprocal of the check polynomial."""
        return BinaryCyclicCode(self.n, reciprocal(self.check_polynomial))

    def _require_budget(self, budget: int) -> None:
        if self.dimension > budget:
            raise BudgetExceeded(f"binary cyclic code <{to_symbolic(self.generator)}> of length {self.n}",
                                 self.dimension, budget)

    def codewords(self, budget: int) -> np.ndarray:
        self._require_budget(budget)
        return span_rows(self.basis_rows())

    def weight_enumerator(self, budget: int, threads: int = 1) -> WeightEnumerator:
        self._require_budget(budget)
        logger.info(f"Enumerating 2^{self.dimension} words of <{to_symbolic(self.generator)}> (n={self.n})")
        return WeightEnumerator.from_histogram("hamming", weight_histogram(self.basis_rows(), self.n, threads))

    def min_distance(self, budget: int, threads: int = 1, lower_bound: int = 1) -> Optional[int]:
        """Exhaustive minimum distance; None for the zero code."""
        if self.is_zero_code:
            return None
        self._require_budget(budget)
        return min_nonzero_weight(self.basis_rows(), self.n, threads, lower_bound)
