"""
Words over R = F2 + uF2 and their DNA reading.

A word is stored as two bit-planes: element a + ub at position i puts a
at bit i of `a_plane` and b at bit i of `b_plane`. The base map is
0 -> A, u -> T, 1+u -> C, 1 -> G, so the complement x -> x + u is the
Watson-Crick pairing and G/C positions are exactly the a-plane ones.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from dnacodex.codes.enumeration import popcount_rows, unpack_rows

logger = logging.getLogger(__name__)


class RingElem(Enum):
    """a + ub encoded as a | (b << 1)."""

    ZERO = 0
    ONE = 1
    U = 2
    ONE_PLUS_U = 3

    @classmethod
    def from_bits(cls, a: int, b: int) -> "RingElem":
        return cls((a & 1) | (b & 1) << 1)

    @property
    def a(self) -> int:
        return self.value & 1

    @property
    def b(self) -> int:
        return self.value >> 1

    def __add__(self, other: "RingElem") -> "RingElem":
        return RingElem(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "RingElem") -> "RingElem":
        # (a + ub)(c + ud) = ac + u(ad + bc) since u^2 = 0
        return RingElem.from_bits(self.a & other.a, (self.a & other.b) ^ (self.b & other.a))

    def complement(self) -> "RingElem":
        return self + RingElem.U

    @property
    def base(self) -> str:
        return _TO_BASE[self]

    def __str__(self) -> str:
        return _LABELS[self]


_TO_BASE = {
    RingElem.ZERO: "A",
    RingElem.U: "T",
    RingElem.ONE_PLUS_U: "C",
    RingElem.ONE: "G",
}
_FROM_BASE = {base: elem for elem, base in _TO_BASE.items()}
_LABELS = {RingElem.ZERO: "0", RingElem.ONE: "1", RingElem.U: "u", RingElem.ONE_PLUS_U: "1+u"}
_PAIRS = str.maketrans("ACGT", "TGCA")


def reverse_bits(value: int, n: int) -> int:
    if n == 0:
        return 0
    return int(f"{value:0{n}b}"[::-1], 2)


class WeightTriple(NamedTuple):
    hamming: int
    lee: int
    euclidean: int


@dataclass(frozen=True)
class RingWord:
    length: int
    a_plane: int = 0
    b_plane: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("word length must be non-negative")
        limit = 1 << self.length
        if not (0 <= self.a_plane < limit and 0 <= self.b_plane < limit):
            raise ValueError(f"bit-planes do not fit in length {self.length}")

    @classmethod
    def zero(cls, n: int) -> "RingWord":
        return cls(n)

    @classmethod
    def u_all_ones(cls, n: int) -> "RingWord":
        """u * I(x), the all-u word."""
        return cls(n, 0, (1 << n) - 1)

    @classmethod
    def from_elements(cls, elements: Iterable[RingElem]) -> "RingWord":
        a = b = 0
        n = 0
        for i, e in enumerate(elements):
            a |= e.a << i
            b |= e.b << i
            n = i + 1
        return cls(n, a, b)

    @property
    def elements(self) -> Tuple[RingElem, ...]:
        return tuple(self[i] for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> RingElem:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return RingElem.from_bits(self.a_plane >> i, self.b_plane >> i)

    def __iter__(self) -> Iterator[RingElem]:
        return iter(self.elements)

    def _check_length(self, other: "RingWord") -> None:
        if other.length != self.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __add__(self, other: "RingWord") -> "RingWord":
        self._check_length(other)
        return RingWord(self.length, self.a_plane ^ other.a_plane, self.b_plane ^ other.b_plane)

    __sub__ = __add__

    def times_u(self) -> "RingWord":
        return RingWord(self.length, 0, self.a_plane)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.elements) + ")"


def complement_word(w: RingWord) -> RingWord:
    return RingWord(w.length, w.a_plane, w.b_plane ^ ((1 << w.length) - 1))


def reverse_word(w: RingWord) -> RingWord:
    return RingWord(w.length, reverse_bits(w.a_plane, w.length), reverse_bits(w.b_plane, w.length))


def reverse_complement(w: RingWord) -> RingWord:
    return reverse_word(complement_word(w))


def weights(w: RingWord) -> WeightTriple:
    """n_1 + n_u + n_(1+u), n_1 + 2n_u + n_(1+u), n_1 + 4n_u + n_(1+u)."""
    units = w.a_plane.bit_count()
    pure_u = (w.b_plane & ~w.a_plane).bit_count()
    return WeightTriple(units + pure_u, units + 2 * pure_u, units + 4 * pure_u)


def hamming_distance(x: RingWord, y: RingWord) -> int:
    return weights(x - y).hamming


def lee_distance(x: RingWord, y: RingWord) -> int:
    return weights(x - y).lee


def euclidean_distance(x: RingWord, y: RingWord) -> int:
    return weights(x - y).euclidean


def gc_weight(w: RingWord) -> int:
    """n_1 + n_(1+u): positions reading G or C."""
    return w.a_plane.bit_count()


def gc_content(w: RingWord) -> float:
    return gc_weight(w) / w.length if w.length else 0.0


def gray_image(w: RingWord) -> Tuple[int, ...]:
    """a + ub -> (b, a + b) per coordinate, concatenated to length 2n."""
    bits = []
    for e in w.elements:
        bits.extend((e.b, e.a ^ e.b))
    return tuple(bits)


@dataclass(frozen=True)
class DnaStrand:
    """Bases read 5' -> 3'."""

    bases: str

    def __post_init__(self):
        bad = set(self.bases) - set("ACGT")
        if bad:
            raise ValueError(f"not a DNA strand: unexpected characters {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.bases)

    def __str__(self) -> str:
        return self.bases

    @property
    def gc_count(self) -> int:
        return sum(1 for b in self.bases if b in "GC")

    def reverse_complement(self) -> "DnaStrand":
        return DnaStrand(self.bases.translate(_PAIRS)[::-1])


def to_dna(w: RingWord) -> DnaStrand:
    return DnaStrand("".join(e.base for e in w.elements))


def from_dna(s) -> RingWord:
    """Accept a DnaStrand or a plain string over {A, C, G, T}."""
    strand = s if isinstance(s, DnaStrand) else DnaStrand(str(s).strip().upper())
    return RingWord.from_elements(_FROM_BASE[b] for b in strand.bases)


def word_from_planes(n: int, a_plane: int, b_plane: int) -> RingWord:
    return RingWord(n, int(a_plane), int(b_plane))


def fasta_record(index: int, w: RingWord) -> str:
    triple = weights(w)
    return f">cw{index} gc={gc_weight(w)} wH={triple.hamming} wL={triple.lee}\n{to_dna(w)}\n"


def fasta_records(words: Sequence[Tuple[int, RingWord]]) -> str:
    return "".join(fasta_record(i, w) for i, w in words)


_BASE_LOOKUP = np.array(list("AGTC"))


def dna_rows(a_rows: np.ndarray, b_rows: np.ndarray, n: int) -> List[str]:
    """DNA strings for packed a/b plane rows, one per row."""
    if a_rows.shape[0] == 0:
        return []
    if n == 0:
        return [""] * a_rows.shape[0]
    index = unpack_rows(a_rows, n) + 2 * unpack_rows(b_rows, n)
    letters = np.ascontiguousarray(_BASE_LOOKUP[index])
    return letters.view(f"<U{n}").ravel().tolist()


def fasta_from_rows(a_rows: np.ndarray, b_rows: np.ndarray, n: int, indices: Sequence[int]) -> str:
    """FASTA text for packed codewords, headers as in fasta_record."""
    gc = popcount_rows(a_rows)
    hamming = popcount_rows(a_rows | b_rows)
    lee = gc + 2 * popcount_rows(b_rows & ~a_rows)
    return "".join(
        f">cw{i} gc={g} wH={h} wL={l}\n{seq}\n"
        for i, g, h, l, seq in zip(indices, gc.tolist(), hamming.tolist(), lee.tolist(), dna_rows(a_rows, b_rows, n))
    )
