"""Command line front end.

Subcommands:

  construct   build a family code, write its generator matrix, print [length,dim]
  weights     weight distribution as CSV or JSON
  walsh       full spectrum as CSV (w_index, a, b, twice_re, case)
  verify      minimality verdict as JSON; exit 0 minimal, 3 not minimal
  reproduce   run every formula-vs-enumeration claim; exit 0 iff no mismatch
  export      generator matrix as n+1 lines of 3^n-1 digits

Exit codes: 0 success (and Minimal for verify), 2 invalid input,
3 NotMinimal. All outputs are deterministic except the runtime_ms field
of verify reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .codes import build_code, weight_distribution
from .minimality import brute_force_minimality, walsh_criterion_minimality
from .reproduce import run_reproduction
from .spread_functions import characteristic_function, ternary_function
from .subspaces import full_spread
from .walsh import classify, walsh_spectrum

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_MINIMAL = 3


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="ambient dimension, even, 2..8")
    p.add_argument(
        "--family", choices=("char", "ternary"), required=True, help="function family"
    )
    p.add_argument("--s", type=int, required=True, help="number of value-1 members")
    p.add_argument(
        "--indices",
        type=int,
        nargs="+",
        default=None,
        help="explicit member indices (s of them for char, 2s for ternary); "
        "defaults to the first members in spread order",
    )


def _build_function(args, parser: argparse.ArgumentParser):
    n, family, s = args.n, args.family, args.s
    if n % 2 or not 2 <= n <= 8:
        parser.error(f"--n must be even and within 2..8, got {n}")
    t = n // 2
    limit = 3**t + 1 if family == "char" else (3**t + 1) // 2
    if not 1 <= s <= limit:
        parser.error(f"--s must be within 1..{limit} for {family} at n={n}, got {s}")
    want = s if family == "char" else 2 * s
    indices = tuple(args.indices) if args.indices is not None else tuple(range(want))
    if len(indices) != want:
        parser.error(f"--indices must list exactly {want} members, got {len(indices)}")
    spread = full_spread(t)
    try:
        if family == "char":
            return characteristic_function(spread, indices)
        return ternary_function(spread, indices)
    except ValueError as e:
        parser.error(str(e))


def _open_out(path: str | None):
    return open(path, "w", newline="") if path else None


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _gmatrix_text(code) -> str:
    return "\n".join("".join(str(int(d)) for d in row) for row in code.generator) + "\n"


def cmd_construct(args, parser) -> int:
    f = _build_function(args, parser)
    code = build_code(f)
    out = args.out or f"code_n{args.n}_{args.family}_s{args.s}.gmatrix"
    _emit(_gmatrix_text(code), out)
    meta = {
        "schema": 1,
        "n": args.n,
        "t": args.n // 2,
        "family": args.family,
        "s": args.s,
        "indices": list(f.indices),
        "length": code.length,
        "dimension": code.dimension,
        "rank": code.rank,
        "gmatrix": out,
    }
    with open(out + ".json", "w") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")
    print(f"[{code.length},{code.dimension}]")
    return EXIT_OK


def cmd_export(args, parser) -> int:
    if args.format != "gmatrix":
        parser.error(f"unsupported export format {args.format!r}")
    f = _build_function(args, parser)
    code = build_code(f)
    _emit(_gmatrix_text(code), args.out)
    return EXIT_OK


def cmd_weights(args, parser) -> int:
    f = _build_function(args, parser)
    dist = weight_distribution(build_code(f))
    if args.format == "json":
        payload = {
            "schema": 1,
            "n": args.n,
            "family": args.family,
            "s": args.s,
            "distribution": {str(w): m for w, m in dist.items()},
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["weight", "multiplicity"])
        for w, m in dist.items():
            writer.writerow([w, m])
        _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_walsh(args, parser) -> int:
    f = _build_function(args, parser)
    spec = walsh_spectrum(f)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["w_index", "a", "b", "twice_re", "case"])
    for i in range(len(spec)):
        z = spec[i]
        writer.writerow([i, z.a, z.b, z.twice_re, classify(f, i).label])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    f = _build_function(args, parser)
    if args.method in ("brute", "both") and args.n > 6:
        parser.error("--method brute needs n <= 6; use --method walsh")
    start = time.perf_counter()
    reports = {}
    if args.method in ("walsh", "both"):
        reports["walsh"] = walsh_criterion_minimality(f)
    if args.method in ("brute", "both"):
        reports["brute"] = brute_force_minimality(build_code(f))
    runtime_ms = int((time.perf_counter() - start) * 1000)
    verdicts = {rep.verdict for rep in reports.values()}
    agree = len(verdicts) == 1
    primary = reports.get("brute") or reports["walsh"]
    payload = {
        "schema": 1,
        "n": args.n,
        "family": args.family,
        "s": args.s,
        "verdict": primary.verdict,
        "method": args.method,
        "witness": None if primary.witness is None else primary.witness.to_json(),
        "wt_min": primary.wt_min,
        "wt_max": primary.wt_max,
        "ratio": f"{primary.ratio.numerator}/{primary.ratio.denominator}",
        "ab_satisfied": primary.ab_satisfied,
        "runtime_ms": runtime_ms,
    }
    if args.method == "both":
        payload["methods_agree"] = agree
        payload["walsh_witness"] = (
            None if reports["walsh"].witness is None else reports["walsh"].witness.to_json()
        )
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    if not agree:
        # both deciders answer the same question; disagreement is a bug here
        print("internal error: methods disagree", file=sys.stderr)
        return 1
    return EXIT_OK if primary.is_minimal else EXIT_NOT_MINIMAL


def cmd_reproduce(args, parser) -> int:
    report = run_reproduction()
    for claim in report.claims:
        print(claim.line())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
    print(f"{len(report.claims)} claims, {report.mismatches} mismatches")
    return EXIT_OK if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="spreadcodes",
        description="Ternary linear codes from partial spreads: spectra, "
        "weight distributions and minimality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write its generator")
    _add_family_args(p)
    p.add_argument("--out", default=None, help="generator path (default derived)")
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("weights", help="weight distribution (CSV or JSON)")
    _add_family_args(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(run=cmd_weights)

    p = sub.add_parser("walsh", help="full spectrum as CSV")
    _add_family_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(run=cmd_walsh)

    p = sub.add_parser("verify", help="minimality verdict as JSON")
    _add_family_args(p)
    p.add_argument("--method", choices=("brute", "walsh", "both"), default="both")
    p.add_argument("--out", default=None)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("reproduce", help="check every claim against enumeration")
    p.add_argument("--out", default=None, help="also write a JSON report")
    p.set_defaults(run=cmd_reproduce)

    p = sub.add_parser("export", help="write the generator matrix")
    _add_family_args(p)
    p.add_argument("--format", choices=("gmatrix",), default="gmatrix")
    p.add_argument("--out", default=None)
    p.set_defaults(run=cmd_export)

    args = parser.parse_args(argv)
    return args.run(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
