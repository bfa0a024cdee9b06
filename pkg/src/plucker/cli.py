"""Command-line front end.

Subcommands: report, dual, assumptions, verify, implicitize, render.
Polygons are read as a JSON array of [x, y] integer pairs (the convex hull
is taken on parse).  Exact rationals are serialized as "p/q" strings so
they never pass through floating JSON numbers.

Exit codes: 0 success, 2 parse/usage error, 3 verification mismatch,
4 oracle degeneracy after retries.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .assumptions import (
    DEFAULT_SEARCH_BUDGET,
    AssumptionReport,
    full_assumption_report,
)
from .formulas import (
    PluckerReport,
    dual_fan,
    dual_polygon,
    inflection_count,
    plucker_report,
    vertical_tangent_count,
)
from .lattice import LatticePolygon, WeightedFan
from .oracle import (
    OracleConfig,
    RetriesExhaustedError,
    implicitize_dual,
    inflection_oracle,
    vertical_tangent_oracle,
)
from .render import svg_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_DEGENERATE = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def read_polygon(source: str) -> LatticePolygon:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read polygon: {exc}", EXIT_PARSE)
    return parse_polygon(text)


def parse_polygon(text: str) -> LatticePolygon:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"polygon is not valid JSON: {exc}", EXIT_PARSE)
    if not isinstance(data, list) or not data:
        raise CliError("polygon must be a nonempty JSON array of [x,y] pairs", EXIT_PARSE)
    pts = []
    for item in data:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(c, int) for c in item)
        ):
            raise CliError(f"bad vertex {item!r}: expected [x, y] integers", EXIT_PARSE)
        pts.append((item[0], item[1]))
    return LatticePolygon.hull(pts)


def frac_str(v) -> str:
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def count_json(v):
    """Integers as JSON numbers, non-integers as exact "p/q" strings."""
    f = Fraction(v)
    return int(f) if f.denominator == 1 else frac_str(f)


def fan_json(fan: WeightedFan) -> dict:
    return {f"{u},{v}": w for (u, v), w in fan.rays}


def polygon_json(P: LatticePolygon) -> list:
    return [[x, y] for x, y in P.vertices]


def report_json(r: PluckerReport) -> dict:
    return {
        "polygon": polygon_json(r.polygon),
        "vol": frac_str(r.vol),
        "inflections": r.inflections,
        "bitangents": count_json(r.bitangents),
        "dual_fan": fan_json(r.dual_fan),
        "dual_polygon": polygon_json(r.dual_polygon),
        "dual_vol": frac_str(r.dual_vol),
        "euler_char": r.euler_char,
        "genus": r.genus,
        "vertical_tangents": r.vertical_tangents,
    }


def assumptions_json(rep: AssumptionReport) -> dict:
    out = {
        "a1": rep.a1.value,
        "a2": rep.a2.value,
        "a3": rep.a3.value,
        "all_verified": rep.all_verified,
        "evidence": [list(e) for e in rep.evidence],
    }
    if rep.thin_witness is not None:
        w = rep.thin_witness
        out["thin_witness"] = {
            "k": w.k,
            "translation": list(w.translation),
            "rotation_power": w.rotation_power,
        }
    return out


def report_text(r: PluckerReport) -> str:
    fan = ", ".join(f"({u},{v}):{w}" for (u, v), w in r.dual_fan.rays)
    return "\n".join(
        [
            f"polygon            {list(r.polygon.vertices)}",
            f"vol                {r.vol}",
            f"inflections        {r.inflections}",
            f"bitangents         {r.bitangents}",
            f"dual fan           {fan}",
            f"dual polygon       {list(r.dual_polygon.vertices)}",
            f"dual vol           {r.dual_vol}",
            f"euler char         {r.euler_char}",
            f"genus              {r.genus}",
            f"vertical tangents  {r.vertical_tangents}",
        ]
    )


def assumptions_text(rep: AssumptionReport) -> str:
    lines = [f"a1 {rep.a1.value}", f"a2 {rep.a2.value}", f"a3 {rep.a3.value}"]
    for name, k, outcome in rep.evidence:
        lines.append(f"  [{name} r^{k}] {outcome}")
    if rep.thin_witness is not None:
        w = rep.thin_witness
        lines.append(
            f"  thin witness: k={w.k} translation={w.translation} rotation={w.rotation_power}"
        )
    return "\n".join(lines)


def _budget() -> int:
    raw = os.environ.get("PLUCKER_BUDGET")
    if raw is None:
        return DEFAULT_SEARCH_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"PLUCKER_BUDGET must be an integer, got {raw!r}", EXIT_PARSE)


def _oracle_cfg(args) -> OracleConfig:
    return OracleConfig(seed=args.seed, coeff_bound=args.coeff_bound)


def _require_verified_or_advisory(P: LatticePolygon, args) -> AssumptionReport:
    rep = full_assumption_report(P, budget=_budget())
    if not rep.all_verified and not args.advisory:
        raise CliError(
            "assumptions not all Verified "
            f"(a1={rep.a1.value}, a2={rep.a2.value}, a3={rep.a3.value}); "
            "pass --advisory to run the oracle anyway",
            EXIT_PARSE,
        )
    return rep


def cmd_report(P: LatticePolygon, args) -> tuple[object, str, int]:
    r = plucker_report(P)
    return report_json(r), report_text(r), EXIT_OK


def cmd_dual(P: LatticePolygon, args) -> tuple[object, str, int]:
    fan = dual_fan(P)
    dual = dual_polygon(P)
    payload = {
        "polygon": polygon_json(P),
        "dual_fan": fan_json(fan),
        "dual_polygon": polygon_json(dual),
    }
    fan_line = ", ".join(f"({u},{v}):{w}" for (u, v), w in fan.rays)
    text = f"dual fan      {fan_line}\ndual polygon  {list(dual.vertices)}"
    return payload, text, EXIT_OK


def cmd_assumptions(P: LatticePolygon, args) -> tuple[object, str, int]:
    rep = full_assumption_report(P, budget=_budget())
    return assumptions_json(rep), assumptions_text(rep), EXIT_OK


def cmd_verify(P: LatticePolygon, args) -> tuple[object, str, int]:
    arep = _require_verified_or_advisory(P, args)
    cfg = _oracle_cfg(args)
    pairs = {
        "inflections": (inflection_count(P), inflection_oracle(P, cfg)),
        "vertical_tangents": (
            vertical_tangent_count(P),
            vertical_tangent_oracle(P, cfg),
        ),
    }
    ok = all(formula == oracle for formula, oracle in pairs.values())
    payload = {
        "polygon": polygon_json(P),
        "assumptions": assumptions_json(arep),
        "checks": {
            name: {"formula": f, "oracle": o, "match": f == o}
            for name, (f, o) in pairs.items()
        },
        "match": ok,
    }
    lines = [
        f"{name:18} formula {f:4}  oracle {o:4}  {'ok' if f == o else 'MISMATCH'}"
        for name, (f, o) in pairs.items()
    ]
    lines.append("PASS" if ok else "FAIL")
    return payload, "\n".join(lines), EXIT_OK if ok else EXIT_MISMATCH


def cmd_implicitize(P: LatticePolygon, args) -> tuple[object, str, int]:
    _require_verified_or_advisory(P, args)
    poly, observed = implicitize_dual(P, _oracle_cfg(args))
    coeffs = {
        f"{u},{v}": [c.real, c.imag] for (u, v), c in sorted(poly.terms.items())
    }
    payload = {
        "polygon": polygon_json(P),
        "dual_coefficients": coeffs,
        "observed_polygon": polygon_json(observed),
    }
    lines = [
        f"a^{u} b^{v}  {c.real:+.9g}{c.imag:+.3g}j"
        for (u, v), c in sorted(poly.terms.items())
    ]
    lines.append(f"observed polygon {list(observed.vertices)}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_render(P: LatticePolygon, args) -> tuple[object, str, int]:
    svg = svg_report(P, dual_fan(P), dual_polygon(P))
    return {"svg": svg}, svg, EXIT_OK


_COMMANDS = {
    "report": cmd_report,
    "dual": cmd_dual,
    "assumptions": cmd_assumptions,
    "verify": cmd_verify,
    "implicitize": cmd_implicitize,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plucker",
        description=(
            "Plucker-type invariants of a generic plane curve computed from "
            "its Newton polygon, with analytic cross-checks"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, doc in [
        ("report", "all invariants of the polygon"),
        ("dual", "dual tropical fan and dual Newton polygon"),
        ("assumptions", "tri-state genericity verdicts with evidence"),
        ("verify", "formula vs analytic oracle, side by side"),
        ("implicitize", "numerically recover the dual curve's equation"),
        ("render", "SVG picture of the polygon, fan and dual"),
    ]:
        p = sub.add_parser(name, help=doc)
        p.add_argument(
            "--polygon",
            required=True,
            metavar="FILE",
            help="path to a JSON [[x,y],...] file, or - for stdin",
        )
        p.add_argument("--seed", type=int, default=1, help="oracle RNG seed")
        p.add_argument(
            "--coeff-bound", type=int, default=1000, help="oracle coefficient bound"
        )
        default_fmt = "svg" if name == "render" else "text"
        p.add_argument(
            "--format", choices=("json", "text", "svg"), default=default_fmt
        )
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument(
            "--advisory",
            action="store_true",
            help="run the oracle even when assumptions are not all Verified",
        )
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format == "svg" and args.command != "render":
        _emit(json.dumps({"error": "svg format is only available for render"}), args.out)
        return EXIT_PARSE
    try:
        P = read_polygon(args.polygon)
        payload, text, code = _COMMANDS[args.command](P, args)
    except CliError as exc:
        msg = str(exc)
        _emit(json.dumps({"error": msg}) if args.format == "json" else f"error: {msg}", args.out)
        return exc.code
    except RetriesExhaustedError as exc:
        msg = str(exc)
        _emit(json.dumps({"error": msg}) if args.format == "json" else f"error: {msg}", args.out)
        return EXIT_DEGENERATE
    except ValueError as exc:
        msg = str(exc)
        _emit(json.dumps({"error": msg}) if args.format == "json" else f"error: {msg}", args.out)
        return EXIT_PARSE
    if args.format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit(text, args.out)
    return code


def main() -> None:
    sys.exit(run())
