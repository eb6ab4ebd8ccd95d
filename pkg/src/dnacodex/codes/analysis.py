"""
Code reports: theorem-side verdicts plus an optional definitional audit.

The audit enumerates the generator form a(x) f0 + u b(x) f1, never the
plane decomposition, and checks every DNA constraint from its definition.
Reverse and reverse-complement distances run over the span
rev(C) + C, which is exactly the set of differences x^r - y.
"""

import logging
from typing import Any, Dict, Optional

import numpy as np

from dnacodex.algebra.factor import factor_xn1
from dnacodex.algebra.gf2_poly import is_self_reciprocal, poly_product, to_hex, to_symbolic, xn_minus_one
from dnacodex.codes.cyclic_code import (
    CyclicCodeR,
    DistanceResult,
    Metric,
    Provenance,
    codeword_rows,
    generator_basis,
    gc_weight_enumerator,
    is_reverse_complement,
    is_reversible,
    min_distance,
    require_enumerable,
    residue_gc_enumerator,
    torsion_code,
    verify_closure_sampled,
)
from dnacodex.codes.enumeration import (
    count_distinct_rows,
    independent_rows,
    map_span_chunks,
    ones_row,
    pack_ints,
    popcount_rows,
    reverse_rows,
    row_keys,
    rows_in,
    span_rows,
    words_per_row,
)
from dnacodex.codes.report import (
    BruteForceAudit,
    CodeReport,
    DistanceSummary,
    FactorEntry,
    FactorReport,
    GcSummary,
)
from dnacodex.codes.ring_word import reverse_bits
from dnacodex.utils.errors import BudgetExceeded

logger = logging.getLogger(__name__)

SAMPLED_CLOSURE_WORDS = 64


def _difference_span_basis(c: CyclicCodeR, budget: int) -> np.ndarray:
    """Packed basis of rev(C) + C."""
    n = c.n
    plain = [a | b << n for a, b in generator_basis(c)]
    flipped = [reverse_bits(a, n) | reverse_bits(b, n) << n for a, b in generator_basis(c)]
    basis = independent_rows(plain + flipped)
    if len(basis) > budget:
        raise BudgetExceeded(f"difference span rev(C)+C of {c}", len(basis), budget)
    mask = (1 << n) - 1
    return np.hstack([pack_ints([v & mask for v in basis], n), pack_ints([v >> n for v in basis], n)])


def _constraint_distances(c: CyclicCodeR, budget: int, threads: int):
    """(reverse distance, reverse-complement distance); None when no pair qualifies."""
    basis = _difference_span_basis(c, budget)
    width = words_per_row(c.n)
    ones = ones_row(c.n)
    sentinel = c.n + 1

    def chunk(rows: np.ndarray):
        a, b = rows[:, :width], rows[:, width:]
        plain = popcount_rows(a | b)
        shifted = popcount_rows(a | (b ^ ones))
        plain = plain[plain > 0]
        shifted = shifted[shifted > 0]
        return (
            int(plain.min()) if plain.size else sentinel,
            int(shifted.min()) if shifted.size else sentinel,
        )

    results = map_span_chunks(basis, chunk, threads)
    rev = min(r[0] for r in results)
    rc = min(r[1] for r in results)
    return (rev if rev < sentinel else None), (rc if rc < sentinel else None)


def run_bruteforce_audit(c: CyclicCodeR, d: int, budget: int, threads: int = 1) -> BruteForceAudit:
    """Enumerate C and check each DNA constraint from its definition."""
    require_enumerable(c, budget)
    n = c.n
    width = words_per_row(n)
    logger.info(f"Auditing 2^{c.log2_cardinality} codewords of {c} against d={d}")

    rows = codeword_rows(c, budget)
    total = rows.shape[0]
    _, first = np.unique(row_keys(rows), return_index=True)
    rows = rows[np.sort(first)]
    distinct = rows.shape[0]

    a, b = rows[:, :width], rows[:, width:]
    hamming = popcount_rows(a | b)
    nonzero = hamming[hamming > 0]
    d_h = int(nonzero.min()) if nonzero.size else None

    gc = popcount_rows(a)
    gc_values = sorted(int(v) for v in np.unique(gc))
    gc_nonzero_residue = sorted(int(v) for v in np.unique(gc[gc > 0]))

    rev_a, rev_b = reverse_rows(a, n), reverse_rows(b, n)
    reverse_closed = bool(rows_in(np.hstack([rev_a, rev_b]), rows).all())
    rc_closed = bool(rows_in(np.hstack([rev_a, rev_b ^ ones_row(n)]), rows).all())

    tor = torsion_code(c)
    torsion_words = span_rows(tor.basis_rows())
    u_words = b[gc == 0]
    u_match = bool(
        count_distinct_rows(u_words) == torsion_words.shape[0]
        and rows_in(u_words, torsion_words).all()
    )

    per_coset = 1 << tor.dimension
    hist = np.bincount(gc, minlength=n + 1)
    coset_hist = {str(w): int(cnt) // per_coset for w, cnt in enumerate(hist) if cnt}

    note = None
    try:
        rev_d, rc_d = _constraint_distances(c, budget, threads)
        rev_ok = rev_d is None or rev_d >= d
        rc_ok = rc_d is None or rc_d >= d
    except BudgetExceeded as e:
        rev_d = rc_d = rev_ok = rc_ok = None
        note = str(e)
        logger.warning(f"Skipping reverse and reverse-complement distances: {note}")
    torsion_d = tor.min_distance(budget, threads)

    audit = BruteForceAudit(
        d=d,
        codewords=total,
        distinct=distinct,
        cardinality_matches=distinct == 1 << c.log2_cardinality,
        hamming_distance=d_h,
        hamming_ok=d_h is None or d_h >= d,
        reverse_distance=rev_d,
        reverse_ok=rev_ok,
        reverse_complement_distance=rc_d,
        reverse_complement_ok=rc_ok,
        gc_values=gc_values,
        gc_values_nonzero_residue=gc_nonzero_residue,
        fixed_gc=len(gc_values) == 1,
        reverse_closed=reverse_closed,
        reverse_complement_closed=rc_closed,
        u_multiples_match_torsion=u_match,
        gc_coset_histogram=coset_hist,
        reversible_agrees=reverse_closed == is_reversible(c),
        reverse_complement_agrees=rc_closed == is_reverse_complement(c),
        hamming_agrees=d_h == torsion_d,
        note=note,
    )
    if not (audit.reversible_agrees and audit.reverse_complement_agrees):
        logger.error(f"❌ Closure audit disagrees with the self-reciprocity criteria for {c}")
    return audit


def _gc_summary(c: CyclicCodeR, budget: int, threads: int) -> GcSummary:
    notes = []
    try:
        theorem = gc_weight_enumerator(c, budget, threads)
    except BudgetExceeded as e:
        theorem = None
        notes.append(str(e))
    try:
        residue = residue_gc_enumerator(c, budget, threads)
    except BudgetExceeded as e:
        residue = None
        notes.append(str(e))

    fixed = None
    if residue is not None and len(residue.nonzero_weights()) == 1:
        fixed = residue.nonzero_weights()[0]

    return GcSummary(
        fixed=fixed,
        enumerator=theorem.to_json_dict() if theorem else None,
        residue_enumerator=residue.to_json_dict() if residue else None,
        theorem_matches_definition=(theorem.counts == residue.counts) if theorem and residue else None,
        note="; ".join(notes) or None,
    )


def _summary(result: DistanceResult) -> DistanceSummary:
    return DistanceSummary(**result.as_dict())


def analyze_code(
    c: CyclicCodeR,
    budget: int,
    threads: int = 1,
    d: Optional[int] = None,
    bruteforce: bool = False,
    hints: Optional[Dict[str, int]] = None,
    config: Optional[Dict[str, Any]] = None,
) -> CodeReport:
    """Build the CodeReport for c.

    `hints` maps metric names to proven lower bounds (e.g. designed
    distances); they only shorten the distance searches.
    """
    hints = hints or {}
    logger.info(f"Analyzing {c}, log2|C| = {c.log2_cardinality}")

    d_h = min_distance(c, Metric.HAMMING, budget, threads, hints.get("hamming"))
    d_l = min_distance(c, Metric.LEE, budget, threads, hints.get("lee"), hamming=d_h)
    d_e = min_distance(c, Metric.EUCLIDEAN, budget, threads, hints.get("euclidean"), hamming=d_h)

    reversible = is_reversible(c)
    rc = is_reverse_complement(c)

    audit = None
    sampled = None
    provenance = Provenance.THEOREM.value
    if bruteforce:
        audit = run_bruteforce_audit(c, d if d is not None else (d_h.bounds[0] or 0), budget, threads)
        if audit.reversible_agrees and audit.reverse_complement_agrees:
            provenance = Provenance.BOTH.value
    elif c.log2_cardinality > budget and not c.is_zero_code:
        sampled = verify_closure_sampled(c, SAMPLED_CLOSURE_WORDS)

    gray = None if c.is_zero_code else [2 * c.n, c.log2_cardinality, d_l.value]

    return CodeReport(
        config=dict(config or {}),
        n=c.n,
        f0=to_symbolic(c.f0),
        f1=to_symbolic(c.f1),
        f0_hex=to_hex(c.f0),
        f1_hex=to_hex(c.f1),
        log2_size=c.log2_cardinality,
        rank=c.rank,
        free=c.is_free,
        dH=_summary(d_h),
        dL=_summary(d_l),
        dE=_summary(d_e),
        reversible=reversible,
        reverse_complement=rc,
        verdict_provenance=provenance,
        gc=_gc_summary(c, budget, threads),
        gray_image=gray,
        degenerate_flags=c.degenerate_flags(),
        bruteforce=audit,
        sampled_closure=sampled,
    )


def verify_constraints_bruteforce(c: CyclicCodeR, d: int, budget: int, threads: int = 1) -> CodeReport:
    """Full report with the definitional audit; the code must fit the budget."""
    require_enumerable(c, budget)
    return analyze_code(c, budget, threads, d=d, bruteforce=True)


def factor_report(n: int, config: Optional[Dict[str, Any]] = None) -> FactorReport:
    """Irreducible factors M_i of x^n - 1, checked to multiply back."""
    factors = factor_xn1(n)
    product = poly_product(factors.values())
    entries = [
        FactorEntry(
            rep=rep,
            degree=f.degree,
            poly=to_symbolic(f),
            hex=to_hex(f),
            self_reciprocal=is_self_reciprocal(f),
        )
        for rep, f in factors.items()
    ]
    matches = product == xn_minus_one(n)
    if not matches:
        logger.error(f"❌ Product of the {len(entries)} factors differs from x^{n} - 1")
    return FactorReport(
        config=dict(config or {}),
        n=n,
        count=len(entries),
        product_matches=matches,
        factors=entries,
    )
