"""
Command-line front end

  construct   generator matrix in the shared matrix text format
  gray        binary listing of the Gray image
  invariants  kernel dimension, rank, distances of one code
  table1      published rank/kernel table against computed values
  verify      named check suites
"""

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from jsonschema import ValidationError, validate

from z2s_simplex.constructions import FAMILIES, FamilySpec
from z2s_simplex.errors import (
    EXIT_MISMATCH,
    EXIT_OK,
    BudgetExceeded,
    InvalidParameter,
    StructureViolation,
    Z2sError,
)
from z2s_simplex.invariants import InvariantReport, gray_image, invariant_report
from z2s_simplex.logconfig import configure_logging
from z2s_simplex.matrixio import format_listing, format_matrix
from z2s_simplex.metrics import write_metrics
from z2s_simplex.settings import Settings, load_settings
from z2s_simplex.verification import (
    SUITES,
    SuiteVerifier,
    generate_table1_report,
    generate_verification_report,
    reproduce_table1,
)

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "invariant-report-schema.json"


def _int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as f:
            f.write(text if text.endswith("\n") else text + "\n")
        logger.info(f"Output saved to: {out}")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _spec_from_args(args, settings: Settings) -> FamilySpec:
    ts = args.type
    if args.family == "hadamard" and ts is None:
        raise InvalidParameter("hadamard needs --type t1,...,ts")
    spec = FamilySpec(args.family, args.s, k=args.k, u=args.u, ts=ts)
    spec.validate(settings.budgets.matrix_entries)
    return spec


def validate_report(data: Dict) -> None:
    """Check an InvariantReport dict against the bundled JSON schema"""
    with open(SCHEMA_PATH, "r") as f:
        schema = json.load(f)
    try:
        validate(instance=data, schema=schema)
    except ValidationError as e:
        raise StructureViolation(f"report does not match schema: {e.message}")


def format_report_text(report: InvariantReport) -> str:
    lines = []
    lines.append("=" * 80)
    lines.append(f"INVARIANTS OF {report.label} OVER Z_{1 << report.s}")
    lines.append("=" * 80)
    lines.append(f"Family:           {report.family}")
    lines.append(f"Type:             {report.type}")
    lines.append(f"Length:           {report.n} (binary {report.binary_length})")
    lines.append(f"Size:             {report.size:,}")
    lines.append(f"Kernel dimension: {_or_dash(report.ker)}")
    lines.append(f"Rank:             {_or_dash(report.rank)}")
    lines.append(f"Min distance:     {_or_dash(report.min_dist)}")
    lines.append(f"Min Lee distance: {_or_dash(report.min_lee_dist)}")
    lines.append(f"Linear:           {_or_dash(report.linear)}")
    if report.kernel_cross_check is not None:
        lines.append(f"Kernel check:     {'agree' if report.kernel_cross_check else 'DISAGREE'}")
    lines.append("")
    lines.append("-" * 80)
    lines.append("WEIGHT DISTRIBUTION")
    lines.append("-" * 80)
    for weight, count in report.weights:
        lines.append(f"  {weight:>8}  {count:,}")
    if report.missing:
        lines.append("")
        lines.append(f"PARTIAL: not computed within budget: {', '.join(report.missing)}")
    lines.append("=" * 80)
    return "\n".join(lines)


def _or_dash(value) -> str:
    return "-" if value is None else str(value).lower() if isinstance(value, bool) else str(value)


# commands ------------------------------------------------------------------------

def cmd_construct(args, settings: Settings) -> int:
    spec = _spec_from_args(args, settings)
    _emit(format_matrix(spec.build_matrix(settings.budgets.matrix_entries)), args.out)
    return EXIT_OK


def cmd_gray(args, settings: Settings) -> int:
    spec = _spec_from_args(args, settings)
    code = spec.build_code(settings.budgets.matrix_entries)
    image = gray_image(code, budget=settings.budgets.enumeration, chunk_size=settings.chunk_size)
    _emit(format_listing(image), args.out)
    return EXIT_OK


def cmd_invariants(args, settings: Settings) -> int:
    spec = _spec_from_args(args, settings)
    try:
        report = invariant_report(spec, settings)
    except BudgetExceeded as e:
        if e.partial:
            partial = InvariantReport(**e.partial)
            _emit(json.dumps(e.partial, indent=2) if args.json else format_report_text(partial), args.out)
        raise

    data = report.to_dict()
    if args.json:
        validate_report(data)
        _emit(json.dumps(data, indent=2), args.out)
    else:
        _emit(format_report_text(report), args.out)
    return EXIT_OK if report.kernel_cross_check is not False else EXIT_MISMATCH


def cmd_table1(args, settings: Settings) -> int:
    result = reproduce_table1(settings, extended=args.extended, s_values=args.s, k_max=args.k_max)
    if args.json:
        _emit(json.dumps({"valid": result.valid, "cells": result.cells,
                          "observations": result.observations}, indent=2), args.out)
    else:
        _emit(generate_table1_report(result), args.out)
    if args.metrics:
        write_metrics(args.metrics, cells=result.cells)
    return EXIT_OK if result.valid else EXIT_MISMATCH


def cmd_verify(args, settings: Settings) -> int:
    suites: List[str] = []
    for name in args.suite or ["all"]:
        suites.extend(SUITES if name == "all" else [name])
    suites = list(dict.fromkeys(suites))

    verifier = SuiteVerifier(settings)
    result = verifier.run(suites, s_values=args.s, k_max=args.k_max, s_max=args.s_max)
    if args.json:
        _emit(json.dumps(dataclasses.asdict(result), indent=2), args.out)
    else:
        _emit(generate_verification_report(result), args.out)
    if args.metrics:
        write_metrics(args.metrics, checks=result.checks_performed)
    return EXIT_OK if result.valid else EXIT_MISMATCH


COMMANDS = {
    "construct": cmd_construct,
    "gray": cmd_gray,
    "invariants": cmd_invariants,
    "table1": cmd_table1,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2s-simplex",
        description="Z_{2^s}-linear simplex, Hadamard and MacDonald codes: construction and invariants",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Generator matrix of the type alpha simplex code over Z_4, k=2
  z2s-simplex construct --family simplex-alpha --s 2 --k 2

  # Hadamard matrix A^{3,0}
  z2s-simplex construct --family hadamard --s 2 --type 3,0

  # Kernel dimension and rank as JSON
  z2s-simplex invariants --family simplex-beta --s 3 --k 2 --json

  # Reproduce the rank/kernel table including the heavy cells
  z2s-simplex table1 --extended --metrics table1.prom

  # Gray map identities for s up to 6
  z2s-simplex verify --suite gray --s-max 6
        """
    )
    parser.add_argument('--config', help='Configuration file path')
    parser.add_argument('--log-format', choices=['text', 'json'], help='Log output format')
    parser.add_argument('--log-level', help='Log level (default from LOG_LEVEL or config)')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--budget', type=int, help='Maximum number of codewords to enumerate')
    common.add_argument('--threads', type=int, help='Worker threads for kernel computation')
    common.add_argument('--json', action='store_true', help='Emit JSON instead of text')
    common.add_argument('--out', help='Output file path (default: stdout)')

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument('--family', required=True, choices=FAMILIES, help='Code family')
    family.add_argument('--s', type=int, required=True, help='Ring Z_{2^s}')
    family.add_argument('--k', type=int, help='Number of rows (simplex, MacDonald)')
    family.add_argument('--u', type=int, help='Deleted block size (MacDonald)')
    family.add_argument('--type', type=_int_list, help='Hadamard type t1,...,ts')

    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('construct', parents=[common, family], help='Print a generator matrix')
    sub.add_parser('gray', parents=[common, family], help='Print the Gray image as a binary listing')
    sub.add_parser('invariants', parents=[common, family], help='Kernel dimension, rank and distances')

    table1 = sub.add_parser('table1', parents=[common], help='Compare computed values with the published table')
    table1.add_argument('--extended', action='store_true', help='Also compute the heavy cells')
    table1.add_argument('--s', type=_int_list, default=(2, 3, 4), help='Rings to include, e.g. 2,3')
    table1.add_argument('--k-max', type=int, default=4, help='Largest k')
    table1.add_argument('--metrics', help='Write Prometheus textfile metrics to this path')

    verify = sub.add_parser('verify', parents=[common], help='Run named check suites')
    verify.add_argument('--suite', action='append', choices=SUITES + ("all",),
                        help='Suite to run; repeatable (default: all)')
    verify.add_argument('--s', type=_int_list, default=(2, 3), help='Rings for structural suites, e.g. 2,3,4')
    verify.add_argument('--s-max', type=int, default=6, help='Largest s for the gray suite')
    verify.add_argument('--k-max', type=int, default=3, help='Largest k')
    verify.add_argument('--metrics', help='Write Prometheus textfile metrics to this path')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings(args.config)
        configure_logging(
            level=(args.log_level or settings.log_level).upper(),
            fmt=args.log_format or settings.log_format,
        )
        settings = settings.with_overrides(budget=args.budget, threads=args.threads)
        return COMMANDS[args.command](args, settings)
    except Z2sError as e:
        print(f"Error: {e.message}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
