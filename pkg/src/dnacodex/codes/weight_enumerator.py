import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

logger = logging.getLogger(__name__)

METRICS = ("hamming", "lee", "euclidean", "gc")


@dataclass(frozen=True)
class WeightEnumerator:
    """Weight -> count histogram, tagged with the metric it was taken in.

    `complete` is False when only part of a code was enumerated.
    """

    metric: str
    counts: Tuple[Tuple[int, int], ...]
    complete: bool = True

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric '{self.metric}'")

    @classmethod
    def from_counts(cls, metric: str, counts: Mapping[int, int], complete: bool = True) -> "WeightEnumerator":
        items = tuple(sorted((int(w), int(c)) for w, c in counts.items() if c))
        return cls(metric, items, complete)

    @classmethod
    def from_histogram(cls, metric: str, hist: Iterable[int], complete: bool = True) -> "WeightEnumerator":
        return cls.from_counts(metric, {w: int(c) for w, c in enumerate(hist)}, complete)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def to_json_dict(self) -> Dict[str, int]:
        return {str(w): c for w, c in self.counts}

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def count(self, weight: int) -> int:
        return self.as_dict().get(weight, 0)

    def nonzero_weights(self) -> Tuple[int, ...]:
        return tuple(w for w, _ in self.counts if w)

    def min_nonzero_weight(self) -> Optional[int]:
        weights = self.nonzero_weights()
        return weights[0] if weights else None

    def is_symmetric(self, n: int) -> bool:
        """A_i == A_(n-i) for every i."""
        d = self.as_dict()
        return all(d.get(n - w, 0) == c for w, c in d.items())

    def histogram(self, n: int) -> np.ndarray:
        out = np.zeros(n + 1, dtype=np.int64)
        for w, c in self.counts:
            out[w] = c
        return out


def krawtchouk(n: int, j: int, i: int) -> int:
    """K_j(i) = sum_s (-1)^s C(i, s) C(n - i, j - s)."""
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(0, min(i, j) + 1))


def macwilliams_transform(enumerator: WeightEnumerator, n: int) -> WeightEnumerator:
    """Hamming enumerator of the dual of a binary linear code of length n.

    B_j = (1/|C|) sum_i A_i K_j(i); the division is exact.
    """
    if enumerator.metric not in ("hamming", "gc"):
        raise ValueError("MacWilliams identities apply to Hamming enumerators only")
    size = enumerator.total
    if size == 0 or size & (size - 1):
        raise ValueError(f"enumerator total {size} is not the size of a binary linear code")

    dual = {}
    for j in range(n + 1):
        acc = sum(c * krawtchouk(n, j, i) for i, c in enumerator.counts)
        if acc % size:
            raise ValueError(f"non-integral dual weight count at weight {j}")
        if acc:
            dual[j] = acc // size
    return WeightEnumerator.from_counts("hamming", dual)
