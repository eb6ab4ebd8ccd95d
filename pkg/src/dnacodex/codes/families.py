"""
Infinite families of DNA codes over R.

* simplex: free code <h*(x)>, h = (x^n - 1)/M_1, n = 2^m - 1. Every
  codeword with nonzero residue has GC-weight 2^(m-1).
* zetterberg: free code <(x^n - 1)/((x - 1) M_1)>, n = 2^m + 1. Since
  2^m = -1 mod n every coset is reversible.
* reed_muller: free code <g2>, g2 the self-reciprocal part of the
  RM*(2, m) generator, n = 2^m - 1, m even and at least 6.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import sqrt
from typing import Any, Dict, Optional

from dnacodex.algebra.cyclotomic import binary_weight, build_cosets
from dnacodex.algebra.factor import factor_xn1, product_of_cosets
from dnacodex.algebra.gf2_poly import BinPoly, reciprocal, to_symbolic, xn_minus_one
from dnacodex.codes.analysis import analyze_code
from dnacodex.codes.bch import compare_claims, published_claims
from dnacodex.codes.binary_cyclic import BinaryCyclicCode
from dnacodex.codes.cyclic_code import CyclicCodeR, is_reverse_complement, make_code
from dnacodex.codes.report import CodeReport, ReedMullerTable, WeightRowCheck, ZetterbergParams
from dnacodex.codes.weight_enumerator import macwilliams_transform
from dnacodex.utils.errors import BudgetExceeded, DnaCodexError, RefusedConstruction

logger = logging.getLogger(__name__)

SIMPLEX_RANGE = (2, 12)
ZETTERBERG_RANGE = (3, 10)
REED_MULLER_RANGE = (4, 12)


class Family(str, Enum):
    SIMPLEX = "simplex"
    ZETTERBERG = "zetterberg"
    REED_MULLER = "reed_muller"


@dataclass(frozen=True)
class FamilyCode:
    family: Family
    m: int
    code: CyclicCodeR
    predicted: Dict[str, Any] = field(default_factory=dict, hash=False)


def _check_range(name: str, m: int, bounds) -> None:
    low, high = bounds
    if not low <= m <= high:
        raise RefusedConstruction(f"{name} family needs {low} <= m <= {high}, got m = {m}")


def simplex_dna(m: int) -> FamilyCode:
    _check_range("simplex", m, SIMPLEX_RANGE)
    n = (1 << m) - 1
    h = xn_minus_one(n) // factor_xn1(n)[1]
    g = reciprocal(h)
    code = make_code(n, g, g)
    return FamilyCode(
        family=Family.SIMPLEX,
        m=m,
        code=code,
        predicted={
            "log2_size": 2 * m,
            "codewords": 4 ** m,
            "gc_fixed": 1 << (m - 1),
            "torsion_parameters": [n, m, 1 << (m - 1)],
        },
    )


def zetterberg_dna(m: int) -> FamilyCode:
    if m == 2:
        raise RefusedConstruction("m = 2 gives n = 5 and f1 = 1, a degenerate full-space code")
    _check_range("zetterberg", m, ZETTERBERG_RANGE)
    n = (1 << m) + 1
    m1 = factor_xn1(n)[1]
    f1 = xn_minus_one(n) // (BinPoly(0b11) * m1)
    code = make_code(n, f1, f1)
    if not is_reverse_complement(code):
        raise DnaCodexError(f"Zetterberg-derived code for m = {m} is not reverse-complement")
    return FamilyCode(
        family=Family.ZETTERBERG,
        m=m,
        code=code,
        predicted={
            "log2_size": 2 * (2 * m + 1),
            "torsion_dimension": 2 * m + 1,
            "gc_symmetric": True,
        },
    )


def zetterberg_c0_params(m: int, budget: int, threads: int = 1) -> ZetterbergParams:
    """Parameters of C_0, the dual Zetterberg code and C_z itself."""
    fc = zetterberg_dna(m)
    n = fc.code.n
    c0 = BinaryCyclicCode(n, fc.code.f1)
    zetterberg = BinaryCyclicCode(n, factor_xn1(n)[1])
    dual = zetterberg.dual()

    c0_enum = c0.weight_enumerator(budget, threads)
    dual_enum = dual.weight_enumerator(budget, threads)
    z_enum = macwilliams_transform(dual_enum, n)

    a = dual_enum.as_dict()
    d_dual = dual_enum.min_nonzero_weight()
    bound = n / 2 - sqrt(1 << m)
    union_ok = all(c0_enum.count(i) == a.get(i, 0) + a.get(n - i, 0) for i in range(n + 1))

    d_z = z_enum.min_nonzero_weight()
    a3, a4 = z_enum.count(3), z_enum.count(4)
    if m % 2:
        z_ok = d_z == 3 and a3 == n // 3 and a4 == 0
    else:
        z_ok = d_z is not None and 5 <= d_z <= 6

    return ZetterbergParams(
        m=m,
        n=n,
        c0_dimension=c0.dimension,
        dimension_ok=c0.dimension == 2 * m + 1,
        c0_enumerator=c0_enum.to_json_dict(),
        c0_symmetric=c0_enum.is_symmetric(n),
        c0_min_distance=c0_enum.min_nonzero_weight(),
        c0_formula_distance=min(d_dual, n - d_dual) if d_dual else None,
        c0_union_ok=union_ok,
        dual_enumerator=dual_enum.to_json_dict(),
        dual_min_distance=d_dual,
        dual_weights_even=all(w % 2 == 0 for w in dual_enum.nonzero_weights()),
        dual_counts_divisible=all(c % n == 0 for w, c in dual_enum.counts if w),
        dual_distance_bound=bound,
        dual_distance_bound_ok=d_dual is not None and d_dual > bound,
        zetterberg_dimension=zetterberg.dimension,
        zetterberg_min_distance=d_z,
        zetterberg_a3=a3,
        zetterberg_a4=a4,
        zetterberg_ok=z_ok,
    )


def rm_star_generator(m: int) -> BinPoly:
    """prod of M_s over coset representatives s with 1 <= w_2(s) <= m - 3."""
    _check_range("RM*(2, m)", m, REED_MULLER_RANGE)
    n = (1 << m) - 1
    reps = [s for s in build_cosets(n).representatives if 1 <= binary_weight(s) <= m - 3]
    return product_of_cosets(n, reps)


def rm_star_code(m: int) -> BinaryCyclicCode:
    return BinaryCyclicCode((1 << m) - 1, rm_star_generator(m))


def rm_dna(m: int) -> FamilyCode:
    if m % 2:
        raise RefusedConstruction(
            f"m = {m} is odd: negation mod 2^m-1 maps binary weight w to m-w, "
            f"so no nonzero cyclotomic coset is reversible and g2 = 1"
        )
    if m == 4:
        raise RefusedConstruction(
            "m = 4: the RM*(2,4) generator is M_1 alone and Cl(1) mod 15 is not reversible, "
            "so the procedure yields no self-reciprocal factor"
        )
    _check_range("reed_muller", m, REED_MULLER_RANGE)

    n = (1 << m) - 1
    table = build_cosets(n)
    reps = [
        s for s in table.representatives
        if 1 <= binary_weight(s) <= m - 3 and table.is_reversible(s)
    ]
    if not reps:
        raise RefusedConstruction(f"no reversible coset contributes to the RM*(2,{m}) generator")
    g2 = product_of_cosets(n, reps)
    code = make_code(n, g2, g2)
    if not is_reverse_complement(code):
        raise DnaCodexError(f"<g2> for m = {m} is not reverse-complement")
    return FamilyCode(
        family=Family.REED_MULLER,
        m=m,
        code=code,
        predicted={
            "reversible_cosets": reps,
            "g2": to_symbolic(g2),
            "rm_star_dimension": 1 + m + m * (m - 1) // 2,
            "rm_star_min_distance": (1 << (m - 2)) - 1,
            "log2_size": 2 * (n - g2.degree),
        },
    )


def _row_reading(published: int, per_weight) -> str:
    if sum(per_weight) == published:
        return "combined"
    if all(c == published for c in per_weight):
        return "per-weight"
    return "no match"


def rm_table_check(m: int, budget: int, threads: int = 1) -> ReedMullerTable:
    """Enumerate RM*(2, m) and compare with any tabulated weight rows."""
    code = rm_star_code(m)
    enumerator = code.weight_enumerator(budget, threads)
    expected_dim = 1 + m + m * (m - 1) // 2
    d = enumerator.min_nonzero_weight()

    rows = []
    entry = published_claims("reed_muller", m=m)
    for row in (entry or {}).get("weight_table", []):
        per_weight = [enumerator.count(w) for w in row["weights"]]
        reading = _row_reading(row["count"], per_weight)
        if reading == "no match":
            logger.warning(f"RM*(2,{m}) weights {row['weights']}: tabulated {row['count']}, enumerated {per_weight}")
        rows.append(WeightRowCheck(
            weights=row["weights"],
            published=row["count"],
            per_weight=per_weight,
            combined=sum(per_weight),
            reading=reading,
        ))

    return ReedMullerTable(
        m=m,
        dimension=code.dimension,
        dimension_ok=code.dimension == expected_dim,
        min_distance=d,
        min_distance_ok=d == (1 << (m - 2)) - 1,
        enumerator=enumerator.to_json_dict(),
        rows=rows,
    )


def family_code(family: str, m: int) -> FamilyCode:
    builders = {
        Family.SIMPLEX: simplex_dna,
        Family.ZETTERBERG: zetterberg_dna,
        Family.REED_MULLER: rm_dna,
    }
    key = "reed_muller" if family in ("rm", "reed-muller") else family
    try:
        chosen = Family(key)
    except ValueError as e:
        raise RefusedConstruction(f"unknown family '{family}'") from e
    return builders[chosen](m)


def family_report(
    fc: FamilyCode,
    budget: int,
    threads: int = 1,
    d: Optional[int] = None,
    bruteforce: bool = False,
    config: Optional[Dict[str, Any]] = None,
) -> CodeReport:
    """CodeReport plus the family's predictions and their checks."""
    report = analyze_code(fc.code, budget, threads, d=d, bruteforce=bruteforce, config=config)
    extra: Dict[str, Any] = {"family": fc.family.value, "m": fc.m, "predicted": dict(fc.predicted)}

    if fc.family == Family.SIMPLEX:
        torsion = report.gc.enumerator
        if torsion is not None:
            weights = sorted(int(w) for w in torsion if int(w))
            extra["torsion_one_weight"] = weights == [fc.predicted["gc_fixed"]]
        extra["gc_fixed_ok"] = report.gc.fixed == fc.predicted["gc_fixed"]
        entry = published_claims("simplex", m=fc.m)
        if entry:
            report.claims = compare_claims(entry["claims"], report)

    elif fc.family == Family.ZETTERBERG:
        try:
            extra["c0"] = zetterberg_c0_params(fc.m, budget, threads).model_dump()
        except BudgetExceeded as e:
            extra["c0"] = None
            extra["note"] = str(e)
        enumerator = report.gc.enumerator
        if enumerator is not None:
            counts = {int(w): c for w, c in enumerator.items()}
            extra["gc_symmetric"] = all(counts.get(fc.code.n - w, 0) == c for w, c in counts.items())

    elif fc.family == Family.REED_MULLER:
        star = rm_star_code(fc.m)
        extra["rm_star_subcode"] = fc.code.f0.divides(star.generator)
        try:
            extra["rm_star_table"] = rm_table_check(fc.m, budget, threads).model_dump()
        except BudgetExceeded as e:
            extra["rm_star_table"] = None
            extra["note"] = str(e)

    report.family = extra
    return report
