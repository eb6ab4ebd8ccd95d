import itertools

import pytest

from dnacodex.algebra.factor import divisors_of_xn1, factor_xn1
from dnacodex.algebra.gf2_poly import BinPoly, xn_minus_one
from dnacodex.codes.binary_cyclic import BinaryCyclicCode
from dnacodex.codes.analysis import run_bruteforce_audit
from dnacodex.codes.cyclic_code import (
    Metric,
    Provenance,
    codeword_rows,
    contains,
    contains_u_all_ones,
    enumerate_codewords,
    full_code_min_weight,
    full_weight_enumerator,
    gc_weight_enumerator,
    generator_basis,
    is_reverse_complement,
    is_reversible,
    make_code,
    min_distance,
    residue_code,
    residue_gc_enumerator,
    torsion_code,
    verify_closure_sampled,
)
from dnacodex.codes.enumeration import count_distinct_rows
from dnacodex.codes.ring_word import RingWord, from_dna
from dnacodex.utils.errors import BudgetExceeded, PolynomialParseError, RefusedConstruction


def _chain_pairs(n):
    """Every (f0, f1) with f1 | f0 | x^n - 1."""
    divisors = divisors_of_xn1(n)
    return [(f0, f1) for f0, f1 in itertools.product(divisors, repeat=2) if f1.divides(f0)]


def test_parameters():
    c = make_code(7, "x^3+x+1", "1")
    assert (c.deg_f0, c.deg_f1) == (3, 0)
    assert c.log2_cardinality == 11
    assert c.rank == 7
    assert c.residue_dimension == 4
    assert not c.is_free
    assert residue_code(c).generator == BinPoly(0b1011)
    assert torsion_code(c).dimension == 7


def test_make_code_refusals():
    with pytest.raises(RefusedConstruction):
        make_code(8, "x+1", "x+1")
    with pytest.raises(RefusedConstruction, match="divisibility chain violated"):
        make_code(7, "x+1", "x^3+x+1")
    with pytest.raises(RefusedConstruction):
        make_code(7, "x^2+1", "1")
    with pytest.raises(RefusedConstruction):
        make_code(7, "0", "0")
    with pytest.raises(PolynomialParseError):
        make_code(7, "x^3+y", "1")


def test_degenerate_flags():
    assert make_code(7, xn_minus_one(7), xn_minus_one(7)).degenerate_flags() == ["zero_code"]
    assert make_code(7, xn_minus_one(7), "1").degenerate_flags() == ["zero_residue"]
    assert make_code(7, "1", "1").degenerate_flags() == ["full_space"]
    assert make_code(7, "x+1", "1").degenerate_flags() == []


def test_generator_basis_size(hamming_7_4):
    assert len(generator_basis(hamming_7_4)) == hamming_7_4.log2_cardinality == 8


def test_enumerated_words_are_members(hamming_7_4, budget):
    words = list(enumerate_codewords(hamming_7_4, budget))
    assert len(words) == 256
    assert len(set(words)) == 256
    assert all(contains(hamming_7_4, w) for w in words)
    assert not contains(hamming_7_4, from_dna("GAAAAAA"))


def test_membership_length_mismatch(hamming_7_4):
    with pytest.raises(ValueError):
        contains(hamming_7_4, RingWord.zero(6))


def test_budget_is_enforced():
    c = make_code(7, "x^3+x+1", "1")
    with pytest.raises(BudgetExceeded):
        codeword_rows(c, 10)
    assert codeword_rows(c, 11).shape[0] == 2048


@pytest.mark.parametrize("n", [7, 9])
def test_hamming_distance_equals_torsion_distance(n):
    for f0, f1 in _chain_pairs(n):
        c = make_code(n, f0, f1)
        if c.is_zero_code:
            continue
        d = min_distance(c, Metric.HAMMING, budget=2 * n)
        assert d.provenance == Provenance.BOTH.value
        assert d.agreement is True
        assert d.value == torsion_code(c).min_distance(2 * n)


@pytest.mark.parametrize("n", [7, 9])
def test_lee_and_euclidean_bounds(n):
    for f0, f1 in _chain_pairs(n):
        c = make_code(n, f0, f1)
        if c.is_zero_code:
            continue
        d_h = full_code_min_weight(c, Metric.HAMMING, 2 * n)
        d_l = full_code_min_weight(c, Metric.LEE, 2 * n)
        d_e = full_code_min_weight(c, Metric.EUCLIDEAN, 2 * n)
        assert d_h <= d_l <= 2 * d_h
        assert d_h <= d_e <= 4 * d_h
        assert d_l <= 2 * torsion_code(c).min_distance(2 * n)
        if not residue_code(c).is_zero_code:
            assert d_l <= residue_code(c).min_distance(2 * n)


def test_lee_distance_beyond_budget_is_an_interval():
    c = make_code(31, factor_xn1(31)[1], "1")
    d = min_distance(c, Metric.LEE, budget=12)
    assert d.provenance == Provenance.BOUND.value
    low, high = d.bounds
    assert 1 <= low <= high <= 2


def test_zero_code_has_no_distance():
    c = make_code(7, xn_minus_one(7), xn_minus_one(7))
    d = min_distance(c, Metric.HAMMING, 10)
    assert d.value is None
    assert d.note


def test_full_weight_enumerator_totals(hamming_7_4, budget):
    for metric in Metric:
        enum = full_weight_enumerator(hamming_7_4, metric, budget)
        assert enum.total == 256
        assert enum.count(0) == 1


def test_reverse_complement_criteria(rc_code_15, hamming_7_4):
    assert is_reversible(rc_code_15)
    assert contains_u_all_ones(rc_code_15)
    assert is_reverse_complement(rc_code_15)
    assert not is_reversible(hamming_7_4)
    assert not is_reverse_complement(hamming_7_4)
    # reversible, but x+1 does not divide I(x) for odd n
    c = make_code(7, "x+1", "x+1")
    assert is_reversible(c)
    assert not contains_u_all_ones(c)


def test_gc_enumerators(budget):
    free = make_code(7, "x^3+x+1", "x^3+x+1")
    assert gc_weight_enumerator(free, budget).counts == residue_gc_enumerator(free, budget).counts

    c = make_code(7, BinPoly(0b11) * BinPoly(0b1011), "x+1")
    theorem = gc_weight_enumerator(c, budget)
    definition = residue_gc_enumerator(c, budget)
    assert theorem.metric == definition.metric == "gc"
    assert definition.as_dict() == {0: 1, 4: 7}
    assert theorem.counts != definition.counts


def test_sampled_closure(rc_code_15, hamming_7_4):
    result = verify_closure_sampled(rc_code_15, samples=32, seed=7)
    assert result["reverse_complement_closed"] is True
    assert result["reverse_closed"] is True
    assert verify_closure_sampled(hamming_7_4, samples=32)["reverse_closed"] is False


def test_binary_cyclic_code():
    code = BinaryCyclicCode(7, BinPoly(0b1011))
    assert code.dimension == 4
    assert code.check_polynomial == BinPoly(0b10111)
    assert code.dual().dimension == 3
    assert code.dual().min_distance(8) == 4
    assert code.contains(0b1011)
    assert not code.contains(1)
    assert code.codewords(8).shape == (16, 1)
    with pytest.raises(RefusedConstruction):
        BinaryCyclicCode(7, BinPoly(0b111))
    with pytest.raises(BudgetExceeded):
        code.weight_enumerator(3)


def _enumerable_codes(n, budget):
    for f0, f1 in _chain_pairs(n):
        c = make_code(n, f0, f1)
        if not c.is_zero_code and c.log2_cardinality <= budget:
            yield c


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 9, 15])
def test_enumerated_size_matches_cardinality(n, budget):
    seen = 0
    for c in _enumerable_codes(n, budget):
        assert c.log2_cardinality == 2 * n - c.deg_f0 - c.deg_f1
        assert count_distinct_rows(codeword_rows(c, budget)) == 2**c.log2_cardinality
        seen += 1
    assert seen > 0


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 9, 15, 17, 21])
def test_closure_agrees_with_criteria(n):
    for c in _enumerable_codes(n, 14):
        audit = run_bruteforce_audit(c, d=1, budget=14)
        assert audit.reverse_closed == is_reversible(c), str(c)
        assert audit.reverse_complement_closed == is_reverse_complement(c), str(c)
        assert audit.reversible_agrees and audit.reverse_complement_agrees


@pytest.mark.slow
@pytest.mark.parametrize("n", [15, 17, 21])
def test_hamming_distance_equals_torsion_distance_longer(n):
    for c in _enumerable_codes(n, 16):
        assert full_code_min_weight(c, Metric.HAMMING, 16) == torsion_code(c).min_distance(16), str(c)
