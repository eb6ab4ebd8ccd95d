import numpy as np
import pytest

from dnacodex.codes.enumeration import pack_ints
from dnacodex.codes.ring_word import (
    DnaStrand,
    RingElem,
    RingWord,
    complement_word,
    dna_rows,
    euclidean_distance,
    fasta_from_rows,
    fasta_record,
    fasta_records,
    from_dna,
    gc_content,
    gc_weight,
    gray_image,
    hamming_distance,
    lee_distance,
    reverse_bits,
    reverse_complement,
    reverse_word,
    to_dna,
    weights,
)

ZERO, ONE, U, ONE_PLUS_U = RingElem.ZERO, RingElem.ONE, RingElem.U, RingElem.ONE_PLUS_U


def test_ring_multiplication():
    assert U * U == ZERO
    assert ONE_PLUS_U * ONE_PLUS_U == ONE
    assert ONE_PLUS_U * U == U
    assert ONE * ONE_PLUS_U == ONE_PLUS_U
    for x in RingElem:
        assert x * ZERO == ZERO
        assert x + x == ZERO


def test_complement_is_watson_crick():
    assert ZERO.complement() == U
    assert ONE.complement() == ONE_PLUS_U
    pairs = {e.base: e.complement().base for e in RingElem}
    assert pairs == {"A": "T", "T": "A", "G": "C", "C": "G"}
    assert str(ONE_PLUS_U) == "1+u"


def test_weights():
    w = RingWord.from_elements([ONE, U, ONE_PLUS_U, ZERO])
    assert weights(w) == (3, 4, 6)
    assert weights(RingWord.u_all_ones(9)) == (9, 18, 36)
    assert weights(RingWord.zero(5)) == (0, 0, 0)


def test_weight_ordering_holds_for_random_words():
    rng = np.random.default_rng(1)
    for _ in range(200):
        n = int(rng.integers(1, 40))
        w = RingWord(n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n)))
        h, lee, euc = weights(w)
        assert h <= lee <= 2 * h
        assert h <= euc <= 4 * h


def test_distances_are_weights_of_differences():
    x = from_dna("ACGTAC")
    y = from_dna("AGGTTC")
    assert hamming_distance(x, y) == 2
    assert lee_distance(x, y) == weights(x - y).lee
    assert euclidean_distance(x, y) == weights(x - y).euclidean
    assert hamming_distance(x, x) == 0


def test_dna_round_trip():
    w = RingWord.from_elements([ZERO, U, ONE_PLUS_U, ONE])
    assert str(to_dna(w)) == "ATCG"
    assert from_dna("atcg") == w
    assert from_dna(DnaStrand("ATCG")) == w


def test_reverse_complement_matches_strand():
    w = from_dna("AACGT")
    assert str(to_dna(complement_word(w))) == "TTGCA"
    assert str(to_dna(reverse_word(w))) == "TGCAA"
    assert to_dna(reverse_complement(w)) == to_dna(w).reverse_complement()
    assert str(to_dna(reverse_complement(w))) == "ACGTT"


def test_gc():
    w = from_dna("GGCAT")
    assert gc_weight(w) == 3
    assert gc_content(w) == pytest.approx(0.6)
    assert to_dna(w).gc_count == 3
    assert gc_content(RingWord.zero(0)) == 0.0


def test_gray_image_weight_is_lee_weight():
    assert gray_image(RingWord.from_elements([U])) == (1, 1)
    assert gray_image(RingWord.from_elements([ONE])) == (0, 1)
    assert gray_image(RingWord.from_elements([ONE_PLUS_U])) == (1, 0)
    w = from_dna("ACGTTGCA")
    assert sum(gray_image(w)) == weights(w).lee
    assert len(gray_image(w)) == 16


def test_invalid_words():
    with pytest.raises(ValueError):
        RingWord(3, 0b1000, 0)
    with pytest.raises(ValueError):
        RingWord(3) + RingWord(4)
    with pytest.raises(ValueError):
        DnaStrand("ACGX")
    with pytest.raises(IndexError):
        RingWord(3)[3]


def test_times_u():
    w = from_dna("GCAT")
    assert str(to_dna(w.times_u())) == "TTAA"


def test_reverse_bits():
    assert reverse_bits(0b00011, 5) == 0b11000
    assert reverse_bits(0, 0) == 0


def test_fasta_record():
    assert fasta_record(3, from_dna("GCAT")) == ">cw3 gc=2 wH=3 wL=4\nGCAT\n"
    text = fasta_records([(0, from_dna("AA")), (1, from_dna("GT"))])
    assert text.count(">") == 2


def test_vectorized_fasta_matches_per_word_records():
    words = [from_dna(s) for s in ("ACGTACGTAC", "TTTTTTTTTT", "GGGGCCCCAA", "AAAAAAAAAA")]
    n = 10
    a = pack_ints([w.a_plane for w in words], n)
    b = pack_ints([w.b_plane for w in words], n)
    assert dna_rows(a, b, n) == [str(to_dna(w)) for w in words]
    expected = "".join(fasta_record(i, w) for i, w in enumerate(words))
    assert fasta_from_rows(a, b, n, range(4)) == expected


def test_vectorized_rows_past_one_machine_word():
    n = 70
    w = RingWord(n, (1 << 69) | 1, 1 << 68)
    a, b = pack_ints([w.a_plane], n), pack_ints([w.b_plane], n)
    assert dna_rows(a, b, n) == [str(to_dna(w))]
    assert dna_rows(a[:0], b[:0], n) == []
