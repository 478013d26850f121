"""Command-line interface: ``confhom {betti,braid,mcg,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any

from .confighomology import (
    braid_betti,
    config_betti,
    merge_reports,
    parse_surface,
    verify_braid_decomposition,
    verify_n_independence_all,
)
from .confighomology import VerificationReport
from .mcgseries import McgQuery, mcg_rp2_series, verify_k2_dihedral

SCHEMA_VERSION = 1
SUITES = ("all", "braid-decomposition", "n-independence", "dihedral")
DEFAULT_CAPS = {"braid-decomposition": 25, "n-independence": 12, "dihedral": 30}


class UsageError(Exception):
    pass


def _series_doc(command: str, params: dict, column: str, coeffs: list[int]) -> dict:
    return {
        "command": command,
        "parameters": params,
        "result": {
            "columns": ["q", column],
            "rows": [[str(q), str(c)] for q, c in enumerate(coeffs)],
        },
    }


def _report_payload(report: VerificationReport) -> dict:
    return {
        "suite": report.suite,
        "passed": report.passed,
        "cells_checked": str(report.cells_checked),
        "cells_by_k": [[str(k), str(c)] for k, c in report.cells_by_k],
        "mismatches": [
            {
                "k": str(m.k),
                "q": str(m.q),
                "expected": str(m.expected),
                "actual": str(m.actual),
                "context": m.context,
            }
            for m in report.mismatches
        ],
    }


def run_betti(args) -> tuple[dict, int]:
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    try:
        surface = parse_surface(args.surface)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    series = config_betti(surface, args.k)
    params = {"surface": surface.name, "k": args.k}
    return _series_doc("betti", params, "rank", series.as_list()), 0


def run_braid(args) -> tuple[dict, int]:
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    return _series_doc("braid", {"k": args.k}, "rank", braid_betti(args.k).as_list()), 0


def run_mcg(args) -> tuple[dict, int]:
    try:
        query = McgQuery(args.k, args.qmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    series = mcg_rp2_series(query)
    params = {"k": args.k, "qmax": args.qmax}
    return _series_doc("mcg", params, "coefficient", series.as_list()), 0


def run_verify(args) -> tuple[dict, int]:
    for name in ("kmax", "qmax"):
        value = getattr(args, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name} must be nonnegative")
    if any(n < 1 for n in args.n_values):
        raise UsageError("--n values must be >= 1")
    suites = SUITES[1:] if args.suite == "all" else (args.suite,)
    reports = []
    for suite in suites:
        if suite == "braid-decomposition":
            kmax = args.kmax if args.kmax is not None else DEFAULT_CAPS[suite]
            if kmax < 1:
                raise UsageError("braid-decomposition needs --kmax >= 1")
            reports.append(verify_braid_decomposition(kmax))
        elif suite == "n-independence":
            kmax = args.kmax if args.kmax is not None else DEFAULT_CAPS[suite]
            reports.append(verify_n_independence_all(kmax, tuple(args.n_values)))
        else:
            qmax = args.qmax if args.qmax is not None else DEFAULT_CAPS[suite]
            reports.append(verify_k2_dihedral(qmax))
    overall = merge_reports(args.suite, reports)
    params = {"suite": args.suite, "kmax": args.kmax, "qmax": args.qmax,
              "n": list(args.n_values)}
    doc = {
        "command": "verify",
        "parameters": params,
        "result": {
            "passed": overall.passed,
            "cells_checked": str(overall.cells_checked),
            "suites": [_report_payload(r) for r in reports],
        },
    }
    return doc, 0 if overall.passed else 1


def _param_text(params: dict) -> str:
    parts = []
    for key, value in params.items():
        if value is None:
            continue
        if isinstance(value, list):
            value = ",".join(map(str, value))
        parts.append(f"{key}={value}")
    return " ".join(parts)


def render(doc: dict, fmt: str) -> str:
    doc = dict(doc, format=fmt)
    result = doc["result"]
    if fmt == "json":
        return json.dumps(dict(doc, schema=SCHEMA_VERSION), indent=2, sort_keys=True) + "\n"

    buf = io.StringIO()
    if "rows" in result:
        if fmt == "csv":
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(result["columns"])
            writer.writerows(result["rows"])
        else:
            buf.write(f"# {doc['command']} {_param_text(doc['parameters'])}\n")
            buf.write(",".join(row[1] for row in result["rows"]) + "\n")
        return buf.getvalue()

    # verification report
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "passed", "cells_checked", "mismatches"])
        for s in result["suites"]:
            writer.writerow([s["suite"], str(s["passed"]).lower(), s["cells_checked"],
                             str(len(s["mismatches"]))])
        return buf.getvalue()
    buf.write(f"# verify {_param_text(doc['parameters'])}\n")
    for s in result["suites"]:
        status = "PASS" if s["passed"] else "FAIL"
        per_k = " ".join(f"k={k}:{c}" for k, c in s["cells_by_k"])
        buf.write(f"{status} {s['suite']}: {s['cells_checked']} cells ({per_k})\n")
        for m in s["mismatches"]:
            buf.write(f"  mismatch k={m['k']} q={m['q']} expected={m['expected']} "
                      f"actual={m['actual']} {m['context']}\n")
    buf.write(("PASS" if result["passed"] else "FAIL") + " overall\n")
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--output", metavar="FILE", help="write the document here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="confhom",
        description="Mod-2 homology of configuration spaces, braid groups and Gamma^k(RP^2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common],
                       help="Betti numbers of the unordered configuration space F_k(M)/Sigma_k")
    p.add_argument("--surface", required=True,
                   help="rp2 | klein | sphere | nonorientable:g | orientable:g")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(run=run_betti)

    p = sub.add_parser("braid", parents=[common], help="mod-2 Betti numbers of the braid group B_k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(run=run_braid)

    p = sub.add_parser("mcg", parents=[common],
                       help="mod-2 Poincare series of Gamma^k(RP^2), k >= 2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.set_defaults(run=run_mcg)

    p = sub.add_parser("verify", parents=[common], help="run the cross-check suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--qmax", type=int, default=None)
    p.add_argument("--n", dest="n_values", type=int, nargs="+", default=[1, 2, 3],
                   help="label sphere dimensions for the n-independence suite")
    p.set_defaults(run=run_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.run(args)
    except UsageError as exc:
        parser.exit(2, f"confhom {args.command}: error: {exc}\n")
    text = render(doc, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
