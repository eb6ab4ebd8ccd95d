"""
BCH codes over R with designed distance pair (delta0, delta1).

g_delta is the lcm of the minimal polynomials of alpha, ..., alpha^(delta-1),
i.e. the product of M_c over the cosets meeting {1, ..., delta-1}; the code
is <g_delta0 | u g_delta1>. Since 2i lies in the coset of i, g_2t = g_2t+1.
"""

import logging
from dataclasses import dataclass, replace
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from dnacodex.algebra.cyclotomic import build_cosets, has_power_minus_one, multiplicative_order, require_odd_length
from dnacodex.algebra.factor import product_of_cosets
from dnacodex.algebra.gf2_poly import BinPoly
from dnacodex.codes.analysis import analyze_code
from dnacodex.codes.cyclic_code import CyclicCodeR, DistanceResult, is_reverse_complement, make_code
from dnacodex.codes.report import BoundCheck, ClaimCheck, CodeReport, DistanceSummary
from dnacodex.utils.errors import DnaCodexError, RefusedConstruction
from dnacodex.utils.settings import load_yaml_config

logger = logging.getLogger(__name__)

MISMATCH_FLAG = "published/formula mismatch"


@dataclass(frozen=True)
class BchSpec:
    n: int
    delta0: int
    delta1: int
    cosets0: Tuple[int, ...]
    cosets1: Tuple[int, ...]
    g_delta0: BinPoly
    g_delta1: BinPoly
    code: CyclicCodeR
    dna: bool = False


def normalize_delta(delta: int) -> int:
    """Odd designed distance with the same generator (g_2t = g_2t+1)."""
    return delta if delta % 2 else delta + 1


def covering_cosets(n: int, delta: int) -> Tuple[int, ...]:
    """Representatives of the cosets meeting {1, ..., delta-1}."""
    table = build_cosets(n)
    return tuple(sorted({table.coset_of(i)[0] for i in range(1, delta)}))


def bch_generator(n: int, delta: int) -> BinPoly:
    require_odd_length(n)
    if not 1 <= delta <= n:
        raise RefusedConstruction(f"designed distance {delta} outside 1..{n}")
    return product_of_cosets(n, covering_cosets(n, delta))


def bch_code(n: int, delta0: int, delta1: int) -> BchSpec:
    require_odd_length(n)
    if delta1 > delta0:
        raise RefusedConstruction(f"delta1 = {delta1} exceeds delta0 = {delta0}; g_delta1 would not divide g_delta0")
    if not 1 <= delta1 or not delta0 <= n - 1:
        raise RefusedConstruction(f"designed distances must satisfy 1 <= delta1 <= delta0 <= {n - 1}")

    g0, g1 = bch_generator(n, delta0), bch_generator(n, delta1)
    code = make_code(n, g0, g1)
    logger.info(f"BCH({n},{delta0},{delta1}): deg g_{delta0} = {g0.degree}, deg g_{delta1} = {g1.degree}, "
                f"log2|C| = {code.log2_cardinality}")
    return BchSpec(
        n=n,
        delta0=delta0,
        delta1=delta1,
        cosets0=covering_cosets(n, delta0),
        cosets1=covering_cosets(n, delta1),
        g_delta0=g0,
        g_delta1=g1,
        code=code,
    )


def bch_dna(n: int, delta0: int, delta1: int) -> BchSpec:
    """BCH code that is reverse-complement, for n with 2^i = -1 mod n."""
    require_odd_length(n)
    i = has_power_minus_one(n)
    if i is None:
        raise RefusedConstruction(
            f"no i with 2^i = -1 mod {n}: some cyclotomic cosets mod {n} are not reversible, "
            f"so the BCH generators need not be self-reciprocal"
        )
    spec = bch_code(n, delta0, delta1)
    if not is_reverse_complement(spec.code):
        raise DnaCodexError(f"BCH({n},{delta0},{delta1}) failed the reverse-complement check despite 2^{i} = -1 mod {n}")
    return replace(spec, dna=True)


def _primitive_degree(n: int) -> Optional[int]:
    """m with n = 2^m - 1, if any."""
    return (n + 1).bit_length() - 1 if n >= 1 and (n + 1) & n == 0 else None


def _observed(result: DistanceResult) -> Optional[str]:
    lo, hi = result.bounds
    if lo is None:
        return None
    return str(lo) if lo == hi else f"[{lo}, {hi}]"


def _equals(predicted: int, result: DistanceResult) -> Optional[bool]:
    lo, hi = result.bounds
    if lo is None:
        return None
    if lo == hi:
        return lo == predicted
    return False if not lo <= predicted <= hi else None


def _at_least(bound: int, result: DistanceResult) -> Optional[bool]:
    lo, hi = result.bounds
    if lo is None:
        return None
    if lo >= bound:
        return True
    return False if hi < bound else None


def _at_most(bound: int, result: DistanceResult) -> Optional[bool]:
    lo, hi = result.bounds
    if lo is None:
        return None
    if hi <= bound:
        return True
    return False if lo > bound else None


def evaluate_bounds(
    spec: BchSpec, d_h: DistanceResult, d_l: DistanceResult
) -> Tuple[List[BoundCheck], List[str]]:
    """Parameter bounds whose preconditions hold, and the parts skipped."""
    n, d0, d1 = spec.n, spec.delta0, spec.delta1
    rank = spec.code.rank
    m = _primitive_degree(n)
    s = multiplicative_order(n)
    checks: List[BoundCheck] = []
    skipped: List[str] = []

    lee_floor = min(d0, 2 * d1)
    checks.append(BoundCheck(
        part="i",
        statement="min(delta0, 2*delta1) <= d_L",
        predicted=f">= {lee_floor}",
        observed=_observed(d_l),
        consistent=_at_least(lee_floor, d_l),
    ))

    even = [d for d in (d0, d1) if d % 2 == 0 and d + 1 <= n]
    if even:
        same = all(bch_generator(n, d) == bch_generator(n, d + 1) for d in even)
        checks.append(BoundCheck(
            part="ii",
            statement="g_2t = g_2t+1, so even designed distances normalize to odd",
            predicted=", ".join(f"g_{d} = g_{d + 1}" for d in even),
            observed="equal" if same else "different",
            consistent=same,
        ))
    else:
        skipped.append("ii: no even designed distance")

    if d1 % 2:
        w = (d1 - 1) // 2
        checks.append(BoundCheck(
            part="iii",
            statement="delta1 = 2w+1 gives rank >= n - ord_n(2)*w",
            predicted=f">= {n - s * w}",
            observed=str(rank),
            consistent=rank >= n - s * w,
        ))
        limit = (1 << -(-m // 2)) + 3 if m else None
        if m and d1 < limit:
            checks.append(BoundCheck(
                part="iv",
                statement="n = 2^m-1 and delta1 = 2w+1 < 2^ceil(m/2)+3 give rank = 2^m-1-m*w",
                predicted=str(n - m * w),
                observed=str(rank),
                consistent=rank == n - m * w,
            ))
        else:
            skipped.append("iv: needs n = 2^m-1 and delta1 < 2^ceil(m/2)+3")
        if 2 ** (s * w) < sum(comb(n, i) for i in range(w + 2)):
            checks.append(BoundCheck(
                part="viii",
                statement="2^(s*w) < sum_{i<=w+1} C(n,i) gives d_H = 2w+1, reading s as ord_n(2)",
                predicted=str(d1),
                observed=_observed(d_h),
                consistent=_equals(d1, d_h),
                label="interpretation",
            ))
        else:
            skipped.append("viii: 2^(s*w) >= sum_{i<=w+1} C(n,i)")
    else:
        skipped.extend(["iii: delta1 is even", "iv: delta1 is even", "viii: delta1 is even"])

    if m and (d1 + 1) & d1 == 0:
        checks.append(BoundCheck(
            part="v",
            statement="n = 2^m-1 and delta1 = 2^h-1 give d_H = delta1",
            predicted=str(d1),
            observed=_observed(d_h),
            consistent=_equals(d1, d_h),
        ))
    else:
        skipped.append("v: needs n = 2^m-1 and delta1 = 2^h-1")

    if m:
        checks.append(BoundCheck(
            part="vi",
            statement="n = 2^m-1 gives d_H <= 2*delta1-1",
            predicted=f"<= {2 * d1 - 1}",
            observed=_observed(d_h),
            consistent=_at_most(2 * d1 - 1, d_h),
        ))
    else:
        skipped.append("vi: needs n = 2^m-1")

    if n % d1 == 0:
        checks.append(BoundCheck(
            part="vii",
            statement="delta1 divides n gives d_H = delta1",
            predicted=str(d1),
            observed=_observed(d_h),
            consistent=_equals(d1, d_h),
        ))
    else:
        skipped.append("vii: delta1 does not divide n")

    return checks, skipped


def published_claims(section: str, **key: int) -> Optional[Dict[str, Any]]:
    """Entry of published_claims.yaml whose keys match, or None."""
    for entry in load_yaml_config("published_claims.yaml").get(section, []):
        if all(entry.get(k) == v for k, v in key.items()):
            return entry
    return None


def _claim_check(quantity: str, published: Any, computed: Any) -> ClaimCheck:
    if isinstance(computed, DistanceSummary):
        if computed.value is not None:
            matches = computed.value == published
            shown: Any = computed.value
        elif computed.interval:
            lo, hi = computed.interval
            matches = None if lo <= published <= hi else False
            shown = computed.interval
        else:
            matches, shown = None, None
    elif isinstance(computed, list) and isinstance(published, list):
        shown = computed
        pairs = list(zip(published, computed))
        if len(published) != len(computed) or any(c is not None and p != c for p, c in pairs):
            matches = False
        elif any(c is None for _, c in pairs):
            matches = None
        else:
            matches = True
    else:
        shown = computed
        matches = None if computed is None else computed == published
    return ClaimCheck(
        quantity=quantity,
        published=published,
        computed=shown,
        matches=matches,
        flag=MISMATCH_FLAG if matches is False else None,
    )


def compare_claims(claims: Dict[str, Any], report: CodeReport) -> List[ClaimCheck]:
    computed = {
        "log2_size": report.log2_size,
        "d_hamming": report.dH,
        "d_lee": report.dL,
        "d_euclidean": report.dE,
        "gray_image": report.gray_image,
        "gc_fixed": report.gc.fixed,
    }
    checks = [_claim_check(q, v, computed.get(q)) for q, v in claims.items()]
    for check in checks:
        if check.flag:
            logger.warning(f"{check.quantity}: published {check.published} but computed {check.computed} ({MISMATCH_FLAG})")
    return checks


def bch_report(
    spec: BchSpec,
    budget: int,
    threads: int = 1,
    d: Optional[int] = None,
    bruteforce: bool = False,
    config: Optional[Dict[str, Any]] = None,
) -> CodeReport:
    """CodeReport for a BCH code with bounds and published-value checks attached."""
    hints = {
        "hamming": spec.delta1,
        "lee": min(spec.delta0, 2 * spec.delta1),
        "euclidean": min(spec.delta0, 4 * spec.delta1),
    }
    report = analyze_code(spec.code, budget, threads, d=d, bruteforce=bruteforce, hints=hints, config=config)

    d_h = DistanceResult("hamming", report.dH.value, *(report.dH.interval or (None, None)))
    d_l = DistanceResult("lee", report.dL.value, *(report.dL.interval or (None, None)))
    report.bounds, report.bounds_skipped = evaluate_bounds(spec, d_h, d_l)

    entry = published_claims("bch", n=spec.n, delta0=spec.delta0, delta1=spec.delta1)
    if entry:
        report.claims = compare_claims(entry["claims"], report)
    return report
