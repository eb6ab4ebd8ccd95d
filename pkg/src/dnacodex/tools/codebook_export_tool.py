import logging
from pathlib import Path
from typing import Any, Dict, Optional, Type

import numpy as np
from pydantic import BaseModel, Field

from dnacodex.codes.cyclic_code import CyclicCodeR, generator_basis_rows, require_enumerable
from dnacodex.codes.enumeration import iter_span_chunks, popcount_rows, words_per_row
from dnacodex.codes.ring_word import fasta_from_rows
from dnacodex.utils.errors import BudgetExceeded, RefusedConstruction
from dnacodex.utils.settings import DEFAULT_BUDGET, MAX_BUDGET, MIN_BUDGET

logger = logging.getLogger(__name__)


class CodebookExportInput(BaseModel):
    """Input schema for CodebookExportTool."""
    budget: int = Field(DEFAULT_BUDGET, ge=MIN_BUDGET, le=MAX_BUDGET, description="log2 enumeration budget")
    gc: Optional[int] = Field(None, ge=0, description="Keep only codewords with exactly this GC-weight")
    output_path: Optional[str] = Field(None, description="Write the FASTA text here instead of returning it only")


class CodebookExportTool:
    name: str = "CodebookExport"
    description: str = "Writes every codeword of an enumerable code as a FASTA record"
    args_schema: Type[BaseModel] = CodebookExportInput

    def _run(self, code: CyclicCodeR, budget: int = DEFAULT_BUDGET, gc: Optional[int] = None,
             output_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Enumerate the code in message order and render FASTA records
        """
        try:
            params = self.args_schema(budget=budget, gc=gc, output_path=output_path)
            require_enumerable(code, params.budget)

            width = words_per_row(code.n)
            parts = []
            records = 0
            for start, rows in iter_span_chunks(generator_basis_rows(code)):
                a, b = rows[:, :width], rows[:, width:]
                indices = np.arange(start, start + rows.shape[0])
                if params.gc is not None:
                    keep = popcount_rows(a) == params.gc
                    a, b, indices = a[keep], b[keep], indices[keep]
                parts.append(fasta_from_rows(a, b, code.n, indices.tolist()))
                records += a.shape[0]

            fasta = "".join(parts)
            if params.gc is not None and records == 0:
                logger.warning(f"No codeword of {code} has GC-weight {params.gc}")

            if params.output_path:
                path = Path(params.output_path)
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(fasta, encoding="utf-8")
                logger.info(f"Wrote {records} FASTA records to {path}")

            return {
                "success": True,
                "records": records,
                "fasta": fasta,
                "output_path": params.output_path,
            }

        except (RefusedConstruction, BudgetExceeded) as e:
            return {"success": False, "refused": True, "error": str(e)}
        except Exception as e:
            logger.error(f"Error exporting codebook: {str(e)}")
            return {"success": False, "error": str(e)}
