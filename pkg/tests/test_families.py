import pytest

from dnacodex.algebra.gf2_poly import to_symbolic
from dnacodex.codes.cyclic_code import is_reverse_complement, is_reversible, torsion_code
from dnacodex.codes.families import (
    Family,
    family_code,
    family_report,
    rm_dna,
    rm_star_code,
    rm_star_generator,
    rm_table_check,
    simplex_dna,
    zetterberg_c0_params,
    zetterberg_dna,
)
from dnacodex.utils.errors import RefusedConstruction


def test_simplex_parameters(simplex_4):
    code = simplex_4.code
    assert code.n == 15
    assert code.log2_cardinality == 8
    assert code.is_free
    assert simplex_4.predicted["gc_fixed"] == 8
    assert not is_reversible(code)


def test_simplex_report_matches_published_values(simplex_4, budget):
    report = family_report(simplex_4, budget)
    assert report.gc.fixed == 8
    assert report.family["gc_fixed_ok"]
    assert report.family["torsion_one_weight"]
    assert report.gc.enumerator == {"0": 1, "8": 15}
    assert all(c.matches for c in report.claims)


def test_zetterberg_m3(zetterberg_3):
    code = zetterberg_3.code
    assert code.n == 9
    assert to_symbolic(code.f1) == "x^2+x+1"
    assert code.log2_cardinality == 14
    assert is_reverse_complement(code)


def test_zetterberg_c0_odd_m(budget):
    params = zetterberg_c0_params(3, budget)
    assert params.c0_dimension == 7 and params.dimension_ok
    assert params.c0_symmetric
    assert params.c0_union_ok
    assert params.dual_weights_even
    assert params.dual_counts_divisible
    assert params.dual_distance_bound_ok
    assert params.zetterberg_dimension == 3
    assert params.zetterberg_min_distance == 3
    assert params.zetterberg_a3 == 3
    assert params.zetterberg_a4 == 0
    assert params.zetterberg_ok


def test_zetterberg_c0_even_m(budget):
    params = zetterberg_c0_params(4, budget)
    assert params.n == 17
    assert params.c0_dimension == 9
    assert params.zetterberg_min_distance == 5
    assert params.zetterberg_ok


@pytest.mark.parametrize("m", [2, 11])
def test_zetterberg_range(m):
    with pytest.raises(RefusedConstruction):
        zetterberg_dna(m)


@pytest.mark.parametrize("m", [1, 13])
def test_simplex_range(m):
    with pytest.raises(RefusedConstruction):
        simplex_dna(m)


def test_rm_refuses_odd_m():
    with pytest.raises(RefusedConstruction, match="odd"):
        rm_dna(5)


def test_rm_refuses_m4():
    with pytest.raises(RefusedConstruction, match="m = 4"):
        rm_dna(4)


def test_rm_dna_m6():
    fc = rm_dna(6)
    assert fc.predicted["reversible_cosets"] == [7, 21]
    assert fc.code.f0.degree == 8
    assert fc.code.log2_cardinality == 110
    assert is_reverse_complement(fc.code)


def test_rm_star_m6():
    g = rm_star_generator(6)
    assert g.degree == 41
    assert rm_star_code(6).dimension == 22
    assert rm_dna(6).code.f0.divides(g)


@pytest.mark.slow
def test_rm_star_table_m6():
    table = rm_table_check(6, 22)
    assert table.dimension_ok
    assert table.min_distance == 15 and table.min_distance_ok
    readings = [row.reading for row in table.rows]
    assert readings == ["combined", "combined", "combined", "no match"]
    assert table.rows[0].combined == 2604


def test_family_code_aliases():
    assert family_code("rm", 6).family == Family.REED_MULLER
    assert family_code("reed-muller", 6).family == Family.REED_MULLER
    assert family_code("simplex", 3).code.n == 7


def test_unknown_family():
    with pytest.raises(RefusedConstruction, match="unknown family"):
        family_code("hadamard", 3)


def test_rm_report_beyond_budget():
    report = family_report(rm_dna(6), budget=16)
    assert report.family["rm_star_subcode"]
    assert report.family["rm_star_table"] is None
    assert "enumeration budget" in report.family["note"]
    assert report.sampled_closure["reverse_complement_closed"]


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_simplex_torsion_code_has_one_weight(m, budget):
    family = simplex_dna(m)
    enumerator = torsion_code(family.code).weight_enumerator(budget)
    assert enumerator.nonzero_weights() == (1 << (m - 1),)
    assert sum(count for _, count in enumerator.counts) == 2**m
