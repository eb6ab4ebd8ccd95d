from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from dnacodex.utils.settings import DEFAULT_BUDGET, MAX_BUDGET, MIN_BUDGET


class Subcommand(str, Enum):
    FACTOR = "factor"
    COSETS = "cosets"
    CODE = "code"
    BCH = "bch"
    FAMILY = "family"
    VERIFY = "verify"
    EXPORT = "export"


class OutputFormat(str, Enum):
    JSON = "json"
    FASTA = "fasta"
    TABLE = "table"


# Subcommands whose code is picked by --f0/--f1, --d0/--d1 or --family/--m
TARGETED = {Subcommand.VERIFY, Subcommand.EXPORT}


class RunConfig(BaseModel):
    subcommand: Subcommand = Field(..., description="Which action to run.")
    n: Optional[int] = Field(None, description="Code length; odd.")
    f0: Optional[str] = Field(None, description="Residue generator, symbolic ('x^3+x+1') or hex ('0b').")
    f1: Optional[str] = Field(None, description="Torsion generator, symbolic or hex.")
    d0: Optional[int] = Field(None, description="BCH designed distance of the residue generator.")
    d1: Optional[int] = Field(None, description="BCH designed distance of the torsion generator.")
    dna: bool = Field(False, description="Require the BCH code to be reverse-complement (2^i = -1 mod n).")
    family: Optional[str] = Field(None, description="simplex, zetterberg or rm.")
    m: Optional[int] = Field(None, description="Family parameter.")
    d: Optional[int] = Field(None, ge=0, description="Constraint distance for verify and the brute-force audit.")
    gc: Optional[int] = Field(None, ge=0, description="Keep only codewords with this GC-weight on export.")
    export: Optional[str] = Field(None, description="'fasta' to emit the codebook instead of the report.")
    bruteforce: bool = Field(False, description="Attach the definitional audit to the report.")
    budget: int = Field(DEFAULT_BUDGET, description="log2 enumeration budget.")
    threads: Optional[int] = Field(None, ge=1, description="Worker threads; defaults to the available cores.")
    format: OutputFormat = Field(OutputFormat.JSON, description="Output format: json, fasta or table.")
    output: Optional[str] = Field(None, description="Output file; stdout when absent.")

    @field_validator("budget")
    @classmethod
    def budget_in_range(cls, v: int) -> int:
        if not MIN_BUDGET <= v <= MAX_BUDGET:
            raise ValueError(f"budget must lie in [{MIN_BUDGET}, {MAX_BUDGET}], got {v}")
        return v

    @field_validator("export")
    @classmethod
    def export_is_fasta(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v.lower() != "fasta":
            raise ValueError(f"unsupported export format '{v}'; only 'fasta' is available")
        return v.lower() if v else v

    def target_kind(self) -> Optional[str]:
        """'code', 'bch' or 'family' depending on which target flags are set."""
        kinds = self._target_kinds()
        return kinds[0] if len(kinds) == 1 else None

    def _target_kinds(self) -> List[str]:
        kinds = []
        if self.f0 is not None or self.f1 is not None:
            kinds.append("code")
        if self.d0 is not None or self.d1 is not None:
            kinds.append("bch")
        if self.family is not None:
            kinds.append("family")
        return kinds

    def _require(self, *names: str) -> None:
        missing = [f"--{name}" for name in names if getattr(self, name) is None]
        if missing:
            raise ValueError(f"'{self.subcommand.value}' needs {', '.join(missing)}")

    @model_validator(mode="after")
    def check_flags(self) -> "RunConfig":
        sub = self.subcommand
        kinds = self._target_kinds()

        if sub in (Subcommand.FACTOR, Subcommand.COSETS):
            self._require("n")
            if kinds:
                raise ValueError(f"'{sub.value}' takes only --n")
        elif sub == Subcommand.CODE:
            self._require("n", "f0", "f1")
        elif sub == Subcommand.BCH:
            self._require("n", "d0", "d1")
        elif sub == Subcommand.FAMILY:
            self._require("family", "m")

        if sub in (Subcommand.CODE, Subcommand.BCH, Subcommand.FAMILY) and kinds != [sub.value]:
            raise ValueError(f"'{sub.value}' cannot be combined with {', '.join(k for k in kinds if k != sub.value)} options")

        if sub in TARGETED:
            if len(kinds) != 1:
                raise ValueError(
                    f"'{sub.value}' needs exactly one target: --f0/--f1, --d0/--d1 or --family/--m"
                )
            required = {"code": ("n", "f0", "f1"), "bch": ("n", "d0", "d1"), "family": ("family", "m")}
            self._require(*required[kinds[0]])
            if sub == Subcommand.VERIFY:
                self._require("d")

        if self.family is not None and self.n is not None:
            raise ValueError("family codes fix their own length; drop --n")
        if self.dna and "bch" not in kinds:
            raise ValueError("--dna applies to BCH codes only")
        if self.gc is not None and not (sub == Subcommand.EXPORT or self.export):
            raise ValueError("--gc filters exported codebooks; use it with 'export' or --export fasta")
        if self.export and sub not in (Subcommand.CODE, Subcommand.BCH, Subcommand.FAMILY):
            raise ValueError(f"--export is not available for '{sub.value}'")
        if self.format == OutputFormat.FASTA and not (sub == Subcommand.EXPORT or self.export):
            raise ValueError("--format fasta applies to exported codebooks only")
        return self

    def echo(self) -> Dict[str, Any]:
        """Input configuration for the report header; threads and output do not change results."""
        return self.model_dump(mode="json", exclude={"threads", "output"}, exclude_none=True)
