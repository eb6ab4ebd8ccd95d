import pytest

from dnacodex.algebra.factor import factor_xn1
from dnacodex.algebra.gf2_poly import xn_minus_one
from dnacodex.codes.analysis import analyze_code, factor_report, run_bruteforce_audit, verify_constraints_bruteforce
from dnacodex.codes.cyclic_code import make_code
from dnacodex.codes.families import simplex_dna

from dnacodex.utils.errors import BudgetExceeded


def test_simplex_audit(simplex_4, budget):
    audit = run_bruteforce_audit(simplex_4.code, d=1, budget=budget)
    assert audit.codewords == audit.distinct == 256
    assert audit.cardinality_matches
    assert audit.gc_values == [0, 8]
    assert audit.gc_values_nonzero_residue == [8]
    assert not audit.fixed_gc
    assert audit.u_multiples_match_torsion
    assert audit.gc_coset_histogram == {"0": 1, "8": 15}
    assert audit.reversible_agrees
    assert audit.reverse_complement_agrees
    assert audit.hamming_agrees


def test_reverse_complement_code_audit(rc_code_15, budget):
    report = verify_constraints_bruteforce(rc_code_15, d=2, budget=budget)
    audit = report.bruteforce
    assert report.reverse_complement
    assert report.verdict_provenance == "both"
    assert audit.reverse_closed and audit.reverse_complement_closed
    assert audit.hamming_distance == report.dH.value == 2
    assert audit.reverse_distance == audit.hamming_distance
    assert audit.reverse_complement_distance == audit.hamming_distance
    assert audit.hamming_ok and audit.reverse_ok and audit.reverse_complement_ok


def test_constraint_distance_too_large_is_reported(rc_code_15, budget):
    audit = run_bruteforce_audit(rc_code_15, d=3, budget=budget)
    assert not audit.hamming_ok
    assert not audit.reverse_complement_ok


def test_non_reversible_code_audit(hamming_7_4, budget):
    audit = run_bruteforce_audit(hamming_7_4, d=3, budget=budget)
    assert not audit.reverse_closed
    assert not audit.reverse_complement_closed
    assert audit.reversible_agrees and audit.reverse_complement_agrees
    assert audit.hamming_distance == 3
    # reversing a codeword of <x^3+x+1> can land at distance 1 from the code
    assert audit.reverse_distance < 3


def test_audit_needs_budget(rc_code_15):
    with pytest.raises(BudgetExceeded):
        verify_constraints_bruteforce(rc_code_15, d=2, budget=10)


def test_report_fields(zetterberg_3, budget):
    report = analyze_code(zetterberg_3.code, budget, config={"subcommand": "family"})
    assert report.config == {"subcommand": "family"}
    assert report.n == 9
    assert report.f1 == "x^2+x+1"
    assert report.f1_hex == "07"
    assert report.log2_size == 14
    assert report.rank == 7
    assert report.free
    assert report.reverse_complement
    assert report.verdict_provenance == "theorem"
    assert report.gray_image == [18, 14, report.dL.value]
    assert report.gc.theorem_matches_definition is True
    assert report.sampled_closure is None
    assert report.provenance.tool == "dnacodex"


def test_large_code_gets_sampled_closure(rc_code_15):
    report = analyze_code(rc_code_15, budget=8)
    assert report.sampled_closure["reverse_complement_closed"] is True
    assert report.dL.interval is not None or report.dL.provenance == "bound"


def test_zero_code_report():
    report = analyze_code(make_code(7, xn_minus_one(7), xn_minus_one(7)), budget=8)
    assert report.degenerate_flags == ["zero_code"]
    assert report.gray_image is None
    assert report.dH.value is None


def test_report_is_deterministic(zetterberg_3, budget):
    first = analyze_code(zetterberg_3.code, budget, threads=1).model_dump_json()
    second = analyze_code(zetterberg_3.code, budget, threads=4).model_dump_json()
    assert first == second


def test_factor_report():
    report = factor_report(63, {"n": 63})
    assert report.count == 13
    assert report.product_matches
    assert sum(f.degree for f in report.factors) == 63
    assert [f.rep for f in report.factors if f.self_reciprocal] == [0, 7, 21]


def test_audit_runs_when_difference_span_exceeds_budget():
    # <M1 M3 | u M1 M3> at n=15: |C| = 2^14 but rev(C)+C has 2^22 elements
    generator = factor_xn1(15)[1] * factor_xn1(15)[3]
    code = make_code(15, generator, generator)
    report = verify_constraints_bruteforce(code, d=1, budget=16)
    audit = report.bruteforce
    assert audit.cardinality_matches and audit.distinct == 1 << 14
    assert audit.reverse_distance is None and audit.reverse_ok is None
    assert audit.reverse_complement_distance is None and audit.reverse_complement_ok is None
    assert "rev(C)+C" in audit.note
    assert not audit.reverse_closed and not audit.reverse_complement_closed
    assert audit.reversible_agrees and audit.reverse_complement_agrees
    assert audit.u_multiples_match_torsion
    assert audit.hamming_agrees
    assert report.verdict_provenance == "both"


def test_audit_within_budget_has_no_note(rc_code_15, budget):
    assert run_bruteforce_audit(rc_code_15, d=2, budget=budget).note is None


def test_zetterberg_m3_passes_the_audit(zetterberg_3, budget):
    report = verify_constraints_bruteforce(zetterberg_3.code, d=2, budget=budget)
    audit = report.bruteforce
    assert audit.distinct == 1 << 14
    assert audit.reverse_complement_closed and audit.reverse_closed
    assert audit.reverse_complement_ok and audit.reverse_ok and audit.hamming_ok
    assert audit.reverse_complement_agrees and audit.reversible_agrees
    assert report.verdict_provenance == "both"


def test_simplex_m5_codebook(budget):
    audit = run_bruteforce_audit(simplex_dna(5).code, d=1, budget=budget)
    assert audit.distinct == 1024
    assert audit.gc_values_nonzero_residue == [16]
    assert audit.gc_coset_histogram == {"0": 1, "16": 31}
