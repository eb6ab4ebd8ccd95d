from pydantic import BaseModel, Field
from typing import List, Optional, Dict, Any

from dnacodex import __version__


class DistanceSummary(BaseModel):
    value: Optional[int] = Field(None, description="Exact minimum distance, absent for the zero code or when only bounds are known.")
    interval: Optional[List[int]] = Field(None, description="Certified [lower, upper] interval when the exact value is out of budget.")
    provenance: str = Field(..., description="How the value was obtained: theorem, brute-force, both or bound.")
    agreement: Optional[bool] = Field(None, description="With provenance 'both': whether theorem and enumeration agree.")
    note: Optional[str] = Field(None, description="Why the value is absent or only bounded.")


class GcSummary(BaseModel):
    fixed: Optional[int] = Field(None, description="The single GC-weight shared by every codeword with nonzero residue part, if there is one.")
    enumerator: Optional[Dict[str, int]] = Field(None, description="Hamming enumerator of the torsion code <f1>, the GC distribution the structure theorem states.")
    residue_enumerator: Optional[Dict[str, int]] = Field(None, description="GC-weight distribution across u-cosets by definition (Hamming enumerator of <f0>).")
    theorem_matches_definition: Optional[bool] = Field(None, description="Whether the two enumerators coincide (always the case for free codes).")
    note: Optional[str] = Field(None, description="Why GC data is missing, e.g. the budget was exceeded.")


class BruteForceAudit(BaseModel):
    d: int = Field(..., description="Constraint distance the codebook was audited against.")
    codewords: int = Field(..., description="Number of codewords enumerated from the generator form.")
    distinct: int = Field(..., description="Number of distinct codewords among them.")
    cardinality_matches: bool = Field(..., description="distinct == 2^log2_size.")
    hamming_distance: Optional[int] = Field(None, description="Minimum pairwise Hamming distance of the enumerated set.")
    hamming_ok: bool = Field(..., description="Hamming constraint: every pair of distinct codewords is at distance >= d.")
    reverse_distance: Optional[int] = Field(None, description="min H(x^r, y) over pairs with x^r != y.")
    reverse_ok: Optional[bool] = Field(None, description="Reverse constraint holds for d; absent when rev(C)+C exceeds the budget.")
    reverse_complement_distance: Optional[int] = Field(None, description="min H(x^rc, y) over pairs with x^rc != y.")
    reverse_complement_ok: Optional[bool] = Field(None, description="Reverse-complement constraint holds for d; absent when rev(C)+C exceeds the budget.")
    gc_values: List[int] = Field(..., description="Distinct GC-weights over all codewords.")
    gc_values_nonzero_residue: List[int] = Field(..., description="Distinct GC-weights over codewords whose residue part is nonzero.")
    fixed_gc: bool = Field(..., description="All codewords share one GC-weight.")
    reverse_closed: bool = Field(..., description="x^r is a codeword for every codeword x.")
    reverse_complement_closed: bool = Field(..., description="x^rc is a codeword for every codeword x.")
    u_multiples_match_torsion: bool = Field(..., description="The codewords over {0, u} are exactly u<f1>.")
    gc_coset_histogram: Dict[str, int] = Field(..., description="GC-weight histogram with each u-coset counted once.")
    reversible_agrees: bool = Field(..., description="Reverse closure agrees with the self-reciprocity criterion.")
    reverse_complement_agrees: bool = Field(..., description="RC closure agrees with the self-reciprocity plus u*I(x) criterion.")
    hamming_agrees: Optional[bool] = Field(None, description="Enumerated Hamming distance equals the torsion-code distance.")
    note: Optional[str] = Field(None, description="Why the reverse and reverse-complement distances are missing.")


class BoundCheck(BaseModel):
    part: str = Field(..., description="Which statement of the BCH parameter theorem this is.")
    statement: str = Field(..., description="The bound in words, with its precondition.")
    predicted: str = Field(..., description="Value or inequality the bound predicts.")
    observed: Optional[str] = Field(None, description="Computed value or interval it is compared with.")
    consistent: Optional[bool] = Field(None, description="True/False when decidable from the computed data, absent otherwise.")
    label: str = Field("theorem", description="'theorem', or 'interpretation' where a symbol had to be bound by choice.")


class ClaimCheck(BaseModel):
    quantity: str = Field(..., description="Name of the compared quantity.")
    published: Any = Field(..., description="Value quoted in the published worked example.")
    computed: Any = Field(None, description="Value produced here.")
    matches: Optional[bool] = Field(None, description="Whether the two agree; absent when the computed side is only bounded.")
    flag: Optional[str] = Field(None, description="Set to 'published/formula mismatch' on disagreement.")


class ProvenanceBlock(BaseModel):
    tool: str = Field("dnacodex", description="Producing tool.")
    version: str = Field(__version__, description="Tool version.")


class CodeReport(BaseModel):
    config: Dict[str, Any] = Field(default_factory=dict, description="Full input configuration, echoed for reproducibility.")
    n: int = Field(..., description="Code length.")
    f0: str = Field(..., description="Residue generator f0, symbolic.")
    f1: str = Field(..., description="Torsion generator f1, symbolic.")
    f0_hex: str = Field(..., description="f0 as a little-endian hex coefficient string.")
    f1_hex: str = Field(..., description="f1 as a little-endian hex coefficient string.")
    log2_size: int = Field(..., description="log2 of the number of codewords, 2n - deg f0 - deg f1.")
    rank: int = Field(..., description="n - deg f1.")
    free: bool = Field(..., description="f0 == f1.")
    dH: DistanceSummary = Field(..., description="Minimum Hamming distance.")
    dL: DistanceSummary = Field(..., description="Minimum Lee distance.")
    dE: DistanceSummary = Field(..., description="Minimum Euclidean distance.")
    reversible: bool = Field(..., description="f0 and f1 are self-reciprocal.")
    reverse_complement: bool = Field(..., description="Reversible and u*I(x) is a codeword.")
    verdict_provenance: str = Field("theorem", description="theorem, or both when a brute-force audit confirmed the verdicts.")
    gc: GcSummary = Field(..., description="GC-content profile.")
    gray_image: Optional[List[Optional[int]]] = Field(None, description="Binary Gray image parameters [2n, log2_size, d_L]; d_L is null unless exact.")
    degenerate_flags: List[str] = Field(default_factory=list, description="zero_code, zero_residue or full_space.")
    bruteforce: Optional[BruteForceAudit] = Field(None, description="Definitional audit over the enumerated codebook.")
    sampled_closure: Optional[Dict[str, Any]] = Field(None, description="Closure checks on random codewords for codes too large to enumerate.")
    bounds: List[BoundCheck] = Field(default_factory=list, description="Applicable BCH parameter bounds.")
    bounds_skipped: List[str] = Field(default_factory=list, description="Bound parts whose preconditions do not hold.")
    claims: List[ClaimCheck] = Field(default_factory=list, description="Comparison against published worked-example values.")
    family: Optional[Dict[str, Any]] = Field(None, description="Family-specific predictions and checks.")
    provenance: ProvenanceBlock = Field(default_factory=ProvenanceBlock, description="Tool and version only; no timestamps.")


class FactorEntry(BaseModel):
    rep: int = Field(..., description="Coset representative i of M_i.")
    degree: int = Field(..., description="Degree of M_i, equal to the coset size.")
    poly: str = Field(..., description="M_i, symbolic.")
    hex: str = Field(..., description="M_i as hex.")
    self_reciprocal: bool = Field(..., description="Whether M_i equals its reciprocal.")


class FactorReport(BaseModel):
    config: Dict[str, Any] = Field(default_factory=dict, description="Echoed input configuration.")
    n: int = Field(..., description="Length.")
    count: int = Field(..., description="Number of irreducible factors.")
    product_matches: bool = Field(..., description="The factors multiply back to x^n - 1.")
    factors: List[FactorEntry] = Field(..., description="Irreducible factors in representative order.")
    provenance: ProvenanceBlock = Field(default_factory=ProvenanceBlock, description="Tool and version.")


class ZetterbergParams(BaseModel):
    m: int = Field(..., description="Family parameter; length n = 2^m + 1.")
    n: int = Field(..., description="Length 2^m + 1.")
    c0_dimension: int = Field(..., description="Dimension of C_0 = <(x^n - 1)/((x - 1) M_1)>.")
    dimension_ok: bool = Field(..., description="c0_dimension == 2m + 1.")
    c0_enumerator: Dict[str, int] = Field(..., description="Hamming enumerator of C_0.")
    c0_symmetric: bool = Field(..., description="A_i == A_(n-i) for every i.")
    c0_min_distance: Optional[int] = Field(None, description="Minimum distance of C_0.")
    c0_formula_distance: Optional[int] = Field(None, description="min(d_z_dual, n - d_z_dual).")
    c0_union_ok: bool = Field(..., description="A_i == a_i + a_(n-i): C_0 is the dual Zetterberg code plus its complements.")
    dual_enumerator: Dict[str, int] = Field(..., description="Hamming enumerator of the dual Zetterberg code <h*(x)>.")
    dual_min_distance: Optional[int] = Field(None, description="d_z_dual.")
    dual_weights_even: bool = Field(..., description="Every weight of the dual Zetterberg code is even.")
    dual_counts_divisible: bool = Field(..., description="Every nonzero weight count of the dual Zetterberg code is divisible by n.")
    dual_distance_bound: float = Field(..., description="n/2 - sqrt(2^m).")
    dual_distance_bound_ok: bool = Field(..., description="d_z_dual > n/2 - sqrt(2^m).")
    zetterberg_dimension: int = Field(..., description="Dimension of C_z = <M_1>, n - 2m.")
    zetterberg_min_distance: Optional[int] = Field(None, description="d_z from the MacWilliams transform of the dual enumerator.")
    zetterberg_a3: int = Field(..., description="Number of weight-3 words of C_z.")
    zetterberg_a4: int = Field(..., description="Number of weight-4 words of C_z.")
    zetterberg_ok: bool = Field(..., description="Odd m: d = 3, A_3 = n/3, A_4 = 0. Even m: 5 <= d <= 6.")


class WeightRowCheck(BaseModel):
    weights: List[int] = Field(..., description="Weights grouped in one tabulated row.")
    published: int = Field(..., description="Tabulated count.")
    per_weight: List[int] = Field(..., description="Enumerated count of each weight.")
    combined: int = Field(..., description="Sum of the per-weight counts.")
    reading: str = Field(..., description="'combined', 'per-weight' or 'no match'.")


class ReedMullerTable(BaseModel):
    m: int = Field(..., description="Family parameter.")
    dimension: int = Field(..., description="Dimension of RM*(2, m).")
    dimension_ok: bool = Field(..., description="dimension == 1 + m + m(m-1)/2.")
    min_distance: Optional[int] = Field(None, description="Enumerated minimum distance.")
    min_distance_ok: bool = Field(..., description="min_distance == 2^(m-2) - 1.")
    enumerator: Dict[str, int] = Field(..., description="Full Hamming enumerator of RM*(2, m).")
    rows: List[WeightRowCheck] = Field(default_factory=list, description="Per-row comparison with the tabulated enumerator.")
