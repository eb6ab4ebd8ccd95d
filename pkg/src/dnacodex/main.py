#!/usr/bin/env python
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from dnacodex.algebra.cyclotomic import build_cosets, require_odd_length
from dnacodex.codes.analysis import factor_report
from dnacodex.codes.bch import bch_code, bch_dna
from dnacodex.codes.cyclic_code import make_code
from dnacodex.codes.families import family_code
from dnacodex.codes.report import CodeReport, ProvenanceBlock
from dnacodex.run_config import OutputFormat, RunConfig, Subcommand
from dnacodex.tools.code_analyzer_tool import CodeAnalyzerTool
from dnacodex.tools.codebook_export_tool import CodebookExportTool
from dnacodex.utils.errors import BudgetExceeded, PolynomialParseError, RefusedConstruction
from dnacodex.utils.settings import DEFAULT_BUDGET, default_threads, read_environment_overrides

# Setup logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

# Set up paths
PROJECT_ROOT = Path(__file__).resolve().parents[2]  # 2 levels up from this file
INPUT_DIR = PROJECT_ROOT / "input"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_REFUSED = 2


def load_config(config_path: Optional[Path] = None) -> Dict[str, Any]:
    """Load configuration from config.json"""
    config_path = Path(config_path) if config_path else INPUT_DIR / "config.json"
    try:
        with open(config_path, 'r') as f:
            return json.load(f)
    except FileNotFoundError:
        logger.warning(f"Config file not found at {config_path}. Using default values.")
    except json.JSONDecodeError as e:
        logger.warning(f"Config file {config_path} is not valid JSON ({str(e)}). Using default values.")
    return {
        "budget": DEFAULT_BUDGET,
        "threads": None,
        "output_dir": "output",
        "default_pipeline": [],
    }


def build_run_config(values: Dict[str, Any], config_path: Optional[Path] = None) -> RunConfig:
    """Merge defaults, config.json, environment and explicit values (last wins)."""
    file_config = load_config(config_path)
    merged: Dict[str, Any] = {"budget": DEFAULT_BUDGET, "threads": None}
    for key in ("budget", "threads"):
        if file_config.get(key) is not None:
            merged[key] = file_config[key]
    merged.update(read_environment_overrides())
    merged.update({k: v for k, v in values.items() if v is not None})
    return RunConfig(**merged)


def _target(config: RunConfig):
    kind = config.subcommand.value if config.subcommand not in (Subcommand.VERIFY, Subcommand.EXPORT) \
        else config.target_kind()
    if kind == "code":
        return make_code(config.n, config.f0, config.f1)
    if kind == "bch":
        builder = bch_dna if config.dna else bch_code
        return builder(config.n, config.d0, config.d1)
    return family_code(config.family, config.m)


def _code_of(target):
    return getattr(target, "code", target)


def _emit(text: str, config: RunConfig) -> None:
    if config.output:
        path = Path(config.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Output written to {path}")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _as_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _distance_line(name: str, summary) -> str:
    if summary.value is not None:
        return f"  {name}: {summary.value} ({summary.provenance})"
    if summary.interval is not None:
        return f"  {name}: in [{summary.interval[0]}, {summary.interval[1]}] ({summary.provenance})"
    return f"  {name}: - ({summary.note or 'undefined'})"


def format_report_table(report: CodeReport) -> str:
    lines = ["=== Code Report ===",
             f"  n = {report.n}",
             f"  f0 = {report.f0} ({report.f0_hex})",
             f"  f1 = {report.f1} ({report.f1_hex})",
             f"  log2|C| = {report.log2_size}, rank = {report.rank}, free = {report.free}"]
    if report.degenerate_flags:
        lines.append(f"  degenerate: {', '.join(report.degenerate_flags)}")

    lines.append("\n=== Distances ===")
    lines.append(_distance_line("Hamming", report.dH))
    lines.append(_distance_line("Lee", report.dL))
    lines.append(_distance_line("Euclidean", report.dE))
    if report.gray_image:
        lines.append(f"  Gray image: {report.gray_image}")

    lines.append("\n=== DNA Constraints ===")
    lines.append(f"  reversible: {report.reversible}")
    lines.append(f"  reverse-complement: {report.reverse_complement}")
    lines.append(f"  verdicts from: {report.verdict_provenance}")
    if report.gc.fixed is not None:
        lines.append(f"  fixed GC-weight: {report.gc.fixed}")
    if report.gc.enumerator:
        lines.append(f"  GC enumerator: {', '.join(f'{w}:{c}' for w, c in report.gc.enumerator.items())}")

    if report.bruteforce is not None:
        audit = report.bruteforce
        lines.append(f"\n=== Brute-Force Audit (d = {audit.d}) ===")
        lines.append(f"  codewords: {audit.distinct} distinct of {audit.codewords}")
        lines.append(f"  Hamming: {audit.hamming_distance} ok={audit.hamming_ok}")
        lines.append(f"  reverse: {audit.reverse_distance} ok={audit.reverse_ok}")
        lines.append(f"  reverse-complement: {audit.reverse_complement_distance} ok={audit.reverse_complement_ok}")
        lines.append(f"  GC values: {audit.gc_values}")
        if audit.note:
            lines.append(f"  note: {audit.note}")

    if report.bounds:
        lines.append("\n=== BCH Bounds ===")
        for check in report.bounds:
            mark = {True: "ok", False: "VIOLATED", None: "undecided"}[check.consistent]
            lines.append(f"  ({check.part}) {check.statement}: {check.predicted} vs {check.observed} [{mark}]")

    if report.claims:
        lines.append("\n=== Published Values ===")
        for claim in report.claims:
            suffix = f"  <- {claim.flag}" if claim.flag else ""
            lines.append(f"  {claim.quantity}: published {claim.published}, computed {claim.computed}{suffix}")

    return "\n".join(lines) + "\n"


def handle_factor(config: RunConfig) -> int:
    report = factor_report(config.n, config.echo())
    if config.format == OutputFormat.TABLE:
        lines = [f"=== Factors of x^{report.n} - 1 ({report.count}) ==="]
        for entry in report.factors:
            tag = " self-reciprocal" if entry.self_reciprocal else ""
            lines.append(f"  M_{entry.rep}: {entry.poly} [{entry.hex}] degree {entry.degree}{tag}")
        lines.append(f"\n  product matches: {report.product_matches}")
        _emit("\n".join(lines) + "\n", config)
    else:
        _emit(_as_json(report.model_dump(mode="json")), config)
    return EXIT_OK if report.product_matches else EXIT_INTERNAL


def handle_cosets(config: RunConfig) -> int:
    require_odd_length(config.n)
    table = build_cosets(config.n).to_dict()
    if config.format == OutputFormat.TABLE:
        lines = [f"=== 2-cyclotomic cosets mod {table['n']} (ord = {table['ord2']}) ==="]
        for coset in table["cosets"]:
            tag = " reversible" if coset["reversible"] else ""
            lines.append(f"  Cl({coset['rep']}): {coset['members']}{tag}")
        _emit("\n".join(lines) + "\n", config)
    else:
        payload = {"config": config.echo(), **table, "provenance": ProvenanceBlock().model_dump()}
        _emit(_as_json(payload), config)
    return EXIT_OK


def _export(code, config: RunConfig) -> int:
    result = CodebookExportTool()._run(code=code, budget=config.budget, gc=config.gc)
    if not result.get("success", False):
        logger.error(f"Export failed: {result.get('error', 'Unknown error')}")
        return EXIT_REFUSED if result.get("refused") else EXIT_INTERNAL
    logger.info(f"✅ Exported {result['records']} codewords of {code}")
    _emit(result["fasta"], config)
    return EXIT_OK


def handle_report(config: RunConfig, threads: int) -> int:
    """code, bch, family and verify: build the target and emit its report."""
    target = _target(config)
    verify = config.subcommand == Subcommand.VERIFY
    result = CodeAnalyzerTool()._run(
        target=target,
        budget=config.budget,
        threads=threads,
        d=config.d,
        bruteforce=verify or config.bruteforce,
        config=config.echo(),
    )
    if not result.get("success", False):
        logger.error(f"Analysis failed: {result.get('error', 'Unknown error')}")
        return EXIT_REFUSED if result.get("refused") else EXIT_INTERNAL
    report: CodeReport = result["report"]

    if config.export == "fasta":
        logger.info(f"Report: {json.dumps(report.model_dump(mode='json'))}")
        return _export(_code_of(target), config)

    if config.format == OutputFormat.TABLE:
        _emit(format_report_table(report), config)
    else:
        _emit(_as_json(report.model_dump(mode="json")), config)

    audit = report.bruteforce
    if verify and audit is not None:
        agrees = audit.reversible_agrees and audit.reverse_complement_agrees and audit.hamming_agrees is not False
        if not agrees:
            logger.error("❌ Brute-force audit disagrees with the structure theorems")
            return EXIT_INTERNAL
        logger.info("✅ Brute-force audit agrees with the structure theorems")
    return EXIT_OK


def run(config: RunConfig) -> int:
    """Execute one configured action; returns the process exit status"""
    threads = config.threads or default_threads()
    try:
        if config.subcommand == Subcommand.FACTOR:
            return handle_factor(config)
        if config.subcommand == Subcommand.COSETS:
            return handle_cosets(config)
        if config.subcommand == Subcommand.EXPORT:
            return _export(_code_of(_target(config)), config)
        return handle_report(config, threads)

    except (RefusedConstruction, BudgetExceeded, PolynomialParseError) as e:
        logger.error(f"Refused: {str(e)}")
        return EXIT_REFUSED
    except Exception as e:
        logger.error(f"Error running {config.subcommand.value}: {str(e)}")
        return EXIT_INTERNAL


def run_values(values: Dict[str, Any], config_path: Optional[Path] = None) -> int:
    """Validate raw values into a RunConfig and run it"""
    try:
        config = build_run_config(values, config_path)
    except ValidationError as e:
        for err in e.errors():
            logger.error(f"Invalid configuration: {err['msg']}")
        return EXIT_REFUSED
    return run(config)


def default_pipeline(config_path: Optional[Path] = None) -> bool:
    """Run every entry of default_pipeline in config.json, writing into the output directory"""
    file_config = load_config(config_path)
    output_dir = PROJECT_ROOT / file_config.get("output_dir", "output")
    output_dir.mkdir(parents=True, exist_ok=True)

    entries = file_config.get("default_pipeline", [])
    if not entries:
        logger.warning("No default_pipeline entries configured. Nothing to do.")
        return True

    ok = True
    for i, entry in enumerate(entries, 1):
        entry = dict(entry)
        name = entry.pop("name", f"run{i}_{entry.get('subcommand', 'unknown')}")
        suffix = "fasta" if entry.get("subcommand") == "export" or entry.get("export") else "json"
        entry.setdefault("output", str(output_dir / f"{name}.{suffix}"))
        logger.info(f"Starting pipeline step {i}/{len(entries)}: {name}")
        status = run_values(entry, config_path)
        if status == EXIT_OK:
            logger.info(f"✅ {name} completed. Output saved to {entry['output']}")
        else:
            logger.error(f"❌ {name} failed with exit status {status}")
            ok = False
    return ok


def kickoff():
    """Main entry point for the application"""
    default_pipeline()


if __name__ == "__main__":
    kickoff()
