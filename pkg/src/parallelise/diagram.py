"""Diagram files and the JSON reports built from them.

A diagram file is line oriented.  Blank lines and lines whose first
non-space character is ``#`` are ignored.  Every other line is either a
``key: value`` line or a matrix row::

    name: hopf
    comment: Hopf link as the closure of sigma_1^2
    braid: 2 | 1 1
    framings: 0 0

or::

    name: empty
    matrix: 0

``matrix: n`` must be followed by exactly ``n`` rows of ``n`` bits.  Exactly
one of ``braid`` and ``matrix`` is required; ``framings`` needs ``braid``.
Each key may appear at most once.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .braids import (
    BraidWord,
    FramedLink,
    closure_components,
    format_braid,
    linking_matrix,
    linking_parity,
    parse_braid,
    push_off_linking,
    self_linking,
)
from .framing import EvenSurgeryReport, ParallelisationCertificate, check_even_surgery, compute_certificate
from .gf2 import LinkingParity


class DiagramFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


@dataclass(frozen=True)
class DiagramFile:
    braid: Optional[BraidWord] = None
    framings: Optional[tuple[int, ...]] = None
    matrix: Optional[LinkingParity] = None
    name: Optional[str] = None
    comment: Optional[str] = None

    def linking_parity(self) -> LinkingParity:
        if self.matrix is not None:
            return self.matrix
        return linking_parity(self.braid)

    def framed_link(self) -> FramedLink:
        if self.braid is None or self.framings is None:
            raise DiagramFormatError("a braid with framings is required")
        return FramedLink(self.braid, self.framings)


_KEYS = ("name", "comment", "braid", "framings", "matrix")
_INT = re.compile(r"-?(0|[1-9][0-9]*)")


def parse_diagram(text: str) -> DiagramFile:
    seen: dict[str, Any] = {}
    lines = text.splitlines()
    k = 0
    while k < len(lines):
        lineno = k + 1
        line = lines[k].strip()
        k += 1
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if not sep or key not in _KEYS:
            raise DiagramFormatError(f"expected one of {', '.join(_KEYS)} followed by ':'", lineno)
        if key in seen:
            raise DiagramFormatError(f"duplicate key {key!r}", lineno)
        if key in ("name", "comment"):
            seen[key] = value
        elif key == "braid":
            try:
                seen[key] = parse_braid(value)
            except ValueError as exc:
                raise DiagramFormatError(f"bad braid: {exc}", lineno) from None
        elif key == "framings":
            toks = value.split()
            for t in toks:
                if not _INT.fullmatch(t):
                    raise DiagramFormatError(f"bad framing {t!r}", lineno)
            seen[key] = tuple(int(t) for t in toks)
        else:
            if not re.fullmatch(r"0|[1-9][0-9]*", value):
                raise DiagramFormatError(f"matrix size must be a non-negative integer, got {value!r}", lineno)
            n = int(value)
            rows = []
            while len(rows) < n:
                if k >= len(lines):
                    raise DiagramFormatError(f"matrix needs {n} rows, found {len(rows)}", len(lines))
                row_line = lines[k].strip()
                k += 1
                if not row_line or row_line.startswith("#"):
                    continue
                toks = row_line.split()
                if len(toks) != n or any(t not in ("0", "1") for t in toks):
                    raise DiagramFormatError(f"matrix row must be {n} bits", k)
                rows.append([int(t) for t in toks])
            try:
                seen[key] = LinkingParity.from_rows(rows)
            except ValueError as exc:
                raise DiagramFormatError(f"bad matrix: {exc}", lineno) from None

    if ("braid" in seen) == ("matrix" in seen):
        raise DiagramFormatError("exactly one of 'braid' and 'matrix' is required")
    if "framings" in seen:
        if "braid" not in seen:
            raise DiagramFormatError("'framings' is only allowed together with 'braid'")
        count = closure_components(seen["braid"]).count
        if len(seen["framings"]) != count:
            raise DiagramFormatError(
                f"{len(seen['framings'])} framing(s) for a closure with {count} component(s)"
            )
    return DiagramFile(**seen)


def load_diagram(path) -> DiagramFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DiagramFormatError(f"cannot read {path}: {exc}") from None
    return parse_diagram(text)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _input_echo(d: DiagramFile) -> dict:
    echo: dict[str, Any] = {}
    if d.name is not None:
        echo["name"] = d.name
    if d.comment is not None:
        echo["comment"] = d.comment
    if d.braid is not None:
        echo["braid"] = format_braid(d.braid)
    if d.framings is not None:
        echo["framings"] = list(d.framings)
    if d.matrix is not None:
        echo["matrix"] = d.matrix.to_rows()
    return echo


def certificate_tree(cert: ParallelisationCertificate) -> dict:
    return {
        "a": cert.a.to_list(),
        "a_inf": cert.a_inf,
        "parities": cert.resulting.as_dict(),
        "valid": cert.valid,
    }


def even_surgery_tree(report: EvenSurgeryReport) -> dict:
    return {
        "all_even": report.all_even,
        "components": [
            {
                "component": c,
                "coefficient": v.coefficient,
                "difference_parity": v.difference_parity,
                "extends": v.extends,
                "self_linking": v.self_linking,
            }
            for c, v in enumerate(report.components)
        ],
        "overall": report.overall,
    }


def certify_report(d: DiagramFile) -> dict:
    lp = d.linking_parity()
    cert = compute_certificate(lp)
    report: dict[str, Any] = {
        "command": "certify",
        "input": _input_echo(d),
        "components": lp.n,
        "linking_parity": lp.to_rows(),
        "certificate": certificate_tree(cert),
    }
    if d.braid is not None:
        report["linking_matrix"] = linking_matrix(d.braid)
    if d.framings is not None:
        report["even_surgery"] = even_surgery_tree(check_even_surgery(d.framed_link()))
    return report


def sl_report(d: DiagramFile) -> dict:
    if d.braid is None:
        raise DiagramFormatError("self-linking needs a braid")
    b = d.braid
    comps = closure_components(b)
    rows = []
    for c in range(comps.count):
        sl = self_linking(b, c)
        oracle = push_off_linking(b, c)
        rows.append({
            "component": c,
            "odd": sl % 2 == 1,
            "oracle_agrees": sl == oracle,
            "push_off_linking": oracle,
            "self_linking": sl,
            "strands": list(comps.strands_of(c)),
        })
    return {
        "command": "sl",
        "input": _input_echo(d),
        "components": rows,
        "ok": all(r["odd"] and r["oracle_agrees"] for r in rows),
    }


def check_even_report(d: DiagramFile) -> dict:
    if d.braid is None or d.framings is None:
        raise DiagramFormatError("check-even needs a braid and framings")
    return {
        "command": "check-even",
        "input": _input_echo(d),
        "even_surgery": even_surgery_tree(check_even_surgery(d.framed_link())),
    }
