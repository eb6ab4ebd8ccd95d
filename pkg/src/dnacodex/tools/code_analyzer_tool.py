import logging
from typing import Any, Dict, Optional, Type, Union

from pydantic import BaseModel, Field

from dnacodex.codes.analysis import analyze_code
from dnacodex.codes.bch import BchSpec, bch_report
from dnacodex.codes.cyclic_code import CyclicCodeR
from dnacodex.codes.families import FamilyCode, family_report
from dnacodex.utils.errors import BudgetExceeded, RefusedConstruction
from dnacodex.utils.settings import DEFAULT_BUDGET, MAX_BUDGET, MIN_BUDGET

logger = logging.getLogger(__name__)

Target = Union[CyclicCodeR, BchSpec, FamilyCode]


class CodeAnalyzerInput(BaseModel):
    """Input schema for CodeAnalyzerTool."""
    budget: int = Field(DEFAULT_BUDGET, ge=MIN_BUDGET, le=MAX_BUDGET, description="log2 enumeration budget")
    threads: int = Field(1, ge=1, description="Worker threads for enumeration")
    d: Optional[int] = Field(None, ge=0, description="Constraint distance for the brute-force audit")
    bruteforce: bool = Field(False, description="Run the definitional audit over the enumerated codebook")


class CodeAnalyzerTool:
    name: str = "CodeAnalyzer"
    description: str = "Computes parameters, distances, DNA-constraint verdicts and GC profile of a code over F2+uF2"
    args_schema: Type[BaseModel] = CodeAnalyzerInput

    def _run(self, target: Target, budget: int = DEFAULT_BUDGET, threads: int = 1, d: Optional[int] = None,
             bruteforce: bool = False, config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        try:
            params = self.args_schema(budget=budget, threads=threads, d=d, bruteforce=bruteforce)
            kwargs = dict(
                budget=params.budget,
                threads=params.threads,
                d=params.d,
                bruteforce=params.bruteforce,
                config=config,
            )

            if isinstance(target, BchSpec):
                report = bch_report(target, **kwargs)
            elif isinstance(target, FamilyCode):
                report = family_report(target, **kwargs)
            elif isinstance(target, CyclicCodeR):
                report = analyze_code(target, **kwargs)
            else:
                return {"success": False, "error": f"Unsupported target type: {type(target).__name__}"}

            return {"success": True, "report": report}

        except (RefusedConstruction, BudgetExceeded) as e:
            return {"success": False, "refused": True, "error": str(e)}
        except Exception as e:
            logger.error(f"Error analyzing code: {str(e)}")
            return {"success": False, "error": str(e)}
