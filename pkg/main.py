"""`dua`: verify the down-up algebra certificates, classify stable ranks, evaluate expressions."""

import argparse
import asyncio
import json
import sys
from pathlib import Path

from loguru import logger

from src.cli.classifier import classify
from src.cli.grammar import eval_expression, parse_scalar
from src.cli.suite import run_suite
from src.cli.table import load_fixture, render_table, run_table
from src.config import Settings, get_settings
from src.errors import DownUpError
from src.models.schemas import (
    ClassificationReport,
    Suite,
    Verdict,
    VerificationReport,
)
from src.pbw.presentation import get_presentation

ALGEBRAS = {"A0": "A0", "A1": "A1", "tilde": "tilde1"}
USAGE_ERROR = 2


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dua",
        description="Exact computations in down-up algebras A(alpha, beta, gamma).",
        epilog="Scalars starting with '-' need a preceding '--', e.g. dua classify -- -1/2 1 0.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run the certificate and property checks")
    verify.add_argument(
        "--suite", choices=[s.value for s in Suite], default=Suite.ALL.value
    )
    verify.add_argument(
        "--bound",
        type=int,
        default=settings.degree_bound,
        help=f"degree bound for the ideal checks (default {settings.degree_bound})",
    )
    verify.add_argument("--json", type=Path, metavar="PATH", help="also write the JSON report")

    classify_cmd = commands.add_parser(
        "classify", help="stable-rank bounds of A(alpha, beta, gamma)"
    )
    for name in ("alpha", "beta", "gamma"):
        classify_cmd.add_argument(name, help="rational or quadratic scalar, e.g. 5/2 or sqrt(-3)")
    classify_cmd.add_argument("--json", action="store_true", help="print the report as JSON")

    eval_cmd = commands.add_parser("eval", help="normal form of an expression in u, w, d")
    eval_cmd.add_argument("expr")
    eval_cmd.add_argument("--alg", choices=list(ALGEBRAS), default="A1")
    eval_cmd.add_argument("--json", action="store_true", help="print the result as JSON")

    table = commands.add_parser(
        "table", help="compare the classifier with the stable-rank table"
    )
    table.add_argument("--out", type=Path, metavar="PATH", help="write the table (.json for JSON)")
    return parser


def _configure_logging(settings: Settings) -> None:
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level)


def _print_verification(report: VerificationReport) -> None:
    for check in report.checks:
        print(f"{check.verdict.upper():<7} {check.id:<40} {check.ms:>9.1f} ms")
        if check.verdict is Verdict.FAIL:
            print(f"        witness: {check.witness}")
    failed = len(report.failures())
    passed = len(report.checks) - failed
    print(f"{passed}/{len(report.checks)} checks passed (bound {report.bound})")


def _print_classification(report: ClassificationReport) -> None:
    print(f"A({report.alpha}, {report.beta}, {report.gamma})")
    print(f"  noetherian: {'yes' if report.noetherian else 'no'}")
    if report.noetherian:
        roots = report.roots
        print(f"  Krull dimension: {report.krull_dim}")
        print(f"  roots: lambda = {roots.lam}, mu = {roots.mu} in {roots.field}")
        if report.exact:
            print(f"  stable rank: {report.sr_lower}")
        else:
            print(f"  stable rank: {report.sr_lower} <= sr <= {report.sr_upper}")
    for rule in report.rule_trace:
        print(f"  - {rule}")


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    report = asyncio.run(run_suite(Suite(args.suite), args.bound, settings))
    _print_verification(report)
    if args.json:
        args.json.write_text(report.model_dump_json(indent=2), encoding="utf-8")
        logger.info(f"wrote {args.json}")
    return 0 if report.passed else 1


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    alpha, beta, gamma = (parse_scalar(text) for text in (args.alpha, args.beta, args.gamma))
    report = classify(alpha, beta, gamma)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        _print_classification(report)
    return 0


def cmd_eval(args: argparse.Namespace, settings: Settings) -> int:
    presentation = get_presentation(ALGEBRAS[args.alg])
    result = eval_expression(args.expr, presentation)
    if args.json:
        payload = {"algebra": args.alg, "input": args.expr, "normal_form": result.to_text()}
        print(json.dumps(payload, indent=2))
    else:
        print(result.to_text())
    return 0


def cmd_table(args: argparse.Namespace, settings: Settings) -> int:
    report = run_table(load_fixture(settings.table_fixture))
    text = render_table(report)
    print(text, end="")
    if args.out:
        content = report.model_dump_json(indent=2) if args.out.suffix == ".json" else text
        args.out.write_text(content, encoding="utf-8")
        logger.info(f"wrote {args.out}")
    return 0 if report.passed else 1


COMMANDS = {
    "verify": cmd_verify,
    "classify": cmd_classify,
    "eval": cmd_eval,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    try:
        settings = get_settings()
    except ValueError as e:
        print(f"dua: configuration error: {e}", file=sys.stderr)
        return USAGE_ERROR
    _configure_logging(settings)
    args = build_parser(settings).parse_args(argv)
    if args.command == "verify" and args.bound < 2:
        print("dua: --bound must be at least 2", file=sys.stderr)
        return USAGE_ERROR
    try:
        return COMMANDS[args.command](args, settings)
    except DownUpError as e:
        logger.debug(f"{args.command} failed with {type(e).__name__}")
        print(f"dua: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
