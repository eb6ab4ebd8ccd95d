import sys
import argparse
import logging
from pathlib import Path
from typing import Any, Dict

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

# Add the src directory to the path so we can import our modules
src_dir = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(src_dir))

from dnacodex.main import EXIT_REFUSED, run_values

FAMILIES = ["simplex", "zetterberg", "rm"]


def _global_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", "-b", type=int, help="log2 enumeration budget, 1..30 (default: 24 or DNACODEX_BUDGET)")
    common.add_argument("--threads", type=int, help="Worker threads (default: available cores or DNACODEX_THREADS)")
    common.add_argument("--output", "-o", help="Output file (default: stdout)")
    common.add_argument("--format", "-f", choices=["json", "fasta", "table"], help="Output format (default: json)")
    common.add_argument("--config", "-c", help="Config file path (default: input/config.json)")
    return common


def _target_options(parser: argparse.ArgumentParser) -> None:
    """Options selecting a code for verify and export"""
    parser.add_argument("--n", type=int, help="Code length (with --f0/--f1 or --d0/--d1)")
    parser.add_argument("--f0", help="Residue generator, e.g. 'x^3+x+1' or hex '0b'")
    parser.add_argument("--f1", help="Torsion generator")
    parser.add_argument("--d0", type=int, help="BCH designed distance of the residue generator")
    parser.add_argument("--d1", type=int, help="BCH designed distance of the torsion generator")
    parser.add_argument("--dna", action="store_true", default=None, help="Require a reverse-complement BCH code")
    parser.add_argument("--family", choices=FAMILIES, help="Family code")
    parser.add_argument("--m", type=int, help="Family parameter")


def parse_args(argv=None):
    """Parse command line arguments"""
    common = _global_options()
    parser = argparse.ArgumentParser(description="dnacodex: cyclic DNA codes over F2 + uF2")

    # Create subparsers for different commands
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # Factor command
    factor_parser = subparsers.add_parser("factor", parents=[common], help="Factor x^n - 1 into minimal polynomials")
    factor_parser.add_argument("--n", type=int, required=True, help="Odd length")

    # Cosets command
    cosets_parser = subparsers.add_parser("cosets", parents=[common], help="List 2-cyclotomic cosets mod n")
    cosets_parser.add_argument("--n", type=int, required=True, help="Odd length")

    # Code command
    code_parser = subparsers.add_parser("code", parents=[common], help="Analyze the code <f0 | u f1>")
    code_parser.add_argument("--n", type=int, required=True, help="Odd length")
    code_parser.add_argument("--f0", required=True, help="Residue generator, e.g. 'x^3+x+1' or hex '0b'")
    code_parser.add_argument("--f1", required=True, help="Torsion generator, must divide f0")
    code_parser.add_argument("--d", type=int, help="Constraint distance for --bruteforce")
    code_parser.add_argument("--bruteforce", action="store_true", default=None, help="Attach the definitional audit")
    code_parser.add_argument("--export", choices=["fasta"], help="Emit the codebook instead of the report")

    # BCH command
    bch_parser = subparsers.add_parser("bch", parents=[common], help="Analyze the BCH code <g_d0, u g_d1>")
    bch_parser.add_argument("--n", type=int, required=True, help="Odd length")
    bch_parser.add_argument("--d0", type=int, required=True, help="Designed distance of the residue generator")
    bch_parser.add_argument("--d1", type=int, required=True, help="Designed distance of the torsion generator")
    bch_parser.add_argument("--dna", action="store_true", default=None, help="Require 2^i = -1 mod n (reverse-complement)")
    bch_parser.add_argument("--d", type=int, help="Constraint distance for --bruteforce")
    bch_parser.add_argument("--bruteforce", action="store_true", default=None, help="Attach the definitional audit")
    bch_parser.add_argument("--export", choices=["fasta"], help="Emit the codebook instead of the report")

    # Family command
    family_parser = subparsers.add_parser("family", parents=[common], help="Build a simplex, Zetterberg or RM DNA code")
    family_parser.add_argument("family", choices=FAMILIES, help="Family name")
    family_parser.add_argument("--m", type=int, required=True, help="Family parameter")
    family_parser.add_argument("--d", type=int, help="Constraint distance for --bruteforce")
    family_parser.add_argument("--bruteforce", action="store_true", default=None, help="Attach the definitional audit")
    family_parser.add_argument("--export", choices=["fasta"], help="Emit the codebook instead of the report")

    # Verify command
    verify_parser = subparsers.add_parser("verify", parents=[common], help="Check the DNA constraints by enumeration")
    _target_options(verify_parser)
    verify_parser.add_argument("--d", type=int, required=True, help="Constraint distance")

    # Export command
    export_parser = subparsers.add_parser("export", parents=[common], help="Write the codebook as FASTA")
    _target_options(export_parser)
    export_parser.add_argument("--gc", type=int, help="Keep only codewords with this GC-weight")

    return parser.parse_args(argv)


def to_values(args: argparse.Namespace) -> Dict[str, Any]:
    """Namespace -> RunConfig fields, dropping options that were not given"""
    values = {k: v for k, v in vars(args).items() if v is not None and k not in ("command", "config")}
    values["subcommand"] = args.command
    return values


def main(argv=None):
    """Main entry point for the CLI"""
    args = parse_args(argv)

    if not args.command:
        logger.error("No command given. Use --help to list the commands.")
        return EXIT_REFUSED

    config_path = Path(args.config) if getattr(args, "config", None) else None
    if config_path is not None and not config_path.exists():
        logger.error(f"Config file not found: {args.config}")
        return EXIT_REFUSED

    return run_values(to_values(args), config_path)


if __name__ == "__main__":
    sys.exit(main())
