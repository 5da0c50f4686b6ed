"""Command-line front end.

Exit codes: 0 success, 1 negative verdict or failed internal check,
2 input error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .contact import CHECK_TOLERANCES, verify_frame_properties
from .diagram import (
    DiagramFormatError,
    certify_report,
    check_even_report,
    dumps,
    load_diagram,
    sl_report,
)
from .gf2 import InternalInvariantError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _significant(x: float, digits: int = 6) -> float:
    return float(f"{x:.{digits - 1}e}")


def cmd_certify(path: str) -> tuple[dict, int]:
    report = certify_report(load_diagram(path))
    return report, EXIT_OK if report["certificate"]["valid"] else EXIT_NEGATIVE


def cmd_sl(path: str) -> tuple[dict, int]:
    report = sl_report(load_diagram(path))
    return report, EXIT_OK if report["ok"] else EXIT_NEGATIVE


def cmd_check_even(path: str) -> tuple[dict, int]:
    report = check_even_report(load_diagram(path))
    return report, EXIT_OK if report["even_surgery"]["overall"] else EXIT_NEGATIVE


def cmd_contact_verify(samples: int, seed: int) -> tuple[dict, int]:
    if samples < 1:
        raise DiagramFormatError(f"--samples must be at least 1, got {samples}")
    result = verify_frame_properties(samples, seed)
    report = {
        "command": "contact-verify",
        "max_residuals": {k: _significant(v) for k, v in result.max_residuals.items()},
        "ok": result.ok,
        "passed": result.passed,
        "samples": samples,
        "seed": seed,
        "tolerances": dict(CHECK_TOLERANCES),
    }
    return report, EXIT_OK if result.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parallelise",
        description="Parallelisation certificates for surgery diagrams of 3-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("certify", "solve for surface twists making the frame extend over every surgery torus"),
        ("sl", "self-linking numbers of the closed-braid components"),
        ("check-even", "check that the contact frame extends over each surgery torus"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
    p = sub.add_parser("contact-verify", help="numerically check the contact frame on S^3")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "certify":
            report, code = cmd_certify(args.file)
        elif args.command == "sl":
            report, code = cmd_sl(args.file)
        elif args.command == "check-even":
            report, code = cmd_check_even(args.file)
        else:
            report, code = cmd_contact_verify(args.samples, args.seed)
    except (DiagramFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
