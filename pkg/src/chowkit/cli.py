"""Command-line front end.

    chowkit verify [--all | --case NAME] [--format text|json] [--timings]
    chowkit compute {deg,fixed-locus,psi-h,dims,strata,det-degrees} --r R [--format text|json]

Exit status is 0 when every executed check passes, 1 on a mismatch or audit
failure and 2 on a usage error.  ``CHOWKIT_THREADS`` caps the number of
worker processes used by ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .voisin import Case, VerificationReport, all_cases, case_by_name, run_case

KINDS = ("deg", "fixed-locus", "psi-h", "dims", "strata", "det-degrees")
# smallest admissible r (for strata: the size m of the forms)
_MIN_R = {"deg": 0, "fixed-locus": 1, "psi-h": 1, "dims": 0, "strata": 2}
_MAX_FIXED_LOCUS_R = 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="chowkit", parents=[fmt], description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[fmt], help="run verification cases")
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true", help="run every case")
    which.add_argument("--case", metavar="NAME", help="run a single named case")
    verify.add_argument("--timings", action="store_true", help="record wall time in millis")

    compute = sub.add_parser("compute", parents=[fmt], help="run one computation")
    compute.add_argument("kind", choices=KINDS)
    compute.add_argument("--r", type=int, default=None)
    compute.add_argument("--timings", action="store_true", help="record wall time in millis")
    return parser


def _threads() -> int:
    raw = os.environ.get("CHOWKIT_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"CHOWKIT_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"CHOWKIT_THREADS must be a positive integer, got {raw!r}")
    return value


def _run_all(cases: list[Case], timings: bool) -> list[VerificationReport]:
    workers = min(_threads(), len(cases))
    if workers <= 1:
        return [run_case(c, timings) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so the report is deterministic
        return list(pool.map(run_case, cases, [timings] * len(cases)))


def compute_case(kind: str, r: int | None) -> Case:
    """A case for ``compute``: the registered one if it exists, else a formula expectation."""
    if kind == "det-degrees":
        return case_by_name("det-degrees")
    if kind == "strata" and r is None:
        r = 5
    if r is None:
        raise UsageError(f"compute {kind} needs --r")
    if r < _MIN_R[kind]:
        raise UsageError(f"compute {kind} needs --r >= {_MIN_R[kind]}")
    if kind == "fixed-locus" and r > _MAX_FIXED_LOCUS_R:
        raise UsageError(f"compute fixed-locus supports --r <= {_MAX_FIXED_LOCUS_R}")
    for c in all_cases():
        if c.kind == kind and c.r == r:
            return c
    if kind == "deg":
        return Case(f"deg-r{r}", kind, r, (4 ** (r + 1),), "derived", ("deg",))
    if kind == "psi-h":
        return Case(f"psi-h-r{r}", kind, r, (3 * r + 4,), "derived", ("h",))
    return Case(f"{kind}-r{r}" if kind != "strata" else f"strata-m{r}", kind, r, None, "none")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _text_line(rep: VerificationReport) -> str:
    status = "PASS" if rep.passed else "FAIL"
    if rep.error:
        return f"{status} {rep.case}: {rep.error}"
    if rep.monomials and rep.monomials[0].startswith("c"):
        body = _signed(rep.monomials, rep.computed)
        expected = _signed(rep.expected_monomials or [], rep.expected or [])
    else:
        body = ", ".join(f"{m} = {v}" for m, v in zip(rep.monomials, rep.computed))
        expected = ", ".join(str(v) for v in rep.expected or [])
    line = f"{status} {rep.case}: {body}"
    if rep.expected is not None:
        line += f"  (expected {expected}; {rep.provenance})"
    else:
        line += "  (no reference value)"
    if rep.millis:
        line += f"  [{rep.millis} ms]"
    return line


def _signed(monos, coeffs) -> str:
    out = ""
    for m, c in zip(monos, coeffs):
        mag = abs(c)
        body = m if mag == 1 else f"{mag}*{m}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def _emit(reports: list[VerificationReport], fmt: str, single: bool, out) -> None:
    if fmt == "json":
        payload = reports[0].to_dict() if single else [r.to_dict() for r in reports]
        out.write(_dump(payload))
        return
    for rep in reports:
        out.write(_text_line(rep) + "\n")
    if not single:
        ok = sum(r.passed for r in reports)
        out.write(f"{ok}/{len(reports)} checks passed\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    fmt = getattr(args, "format", "text")
    try:
        if args.command == "verify":
            if args.all:
                cases = all_cases()
            else:
                try:
                    cases = [case_by_name(args.case)]
                except KeyError:
                    names = ", ".join(c.name for c in all_cases())
                    raise UsageError(f"unknown case {args.case!r}; known cases: {names}")
            reports = _run_all(cases, args.timings)
            single = False
        else:
            case = compute_case(args.kind, args.r)
            reports = [run_case(case, args.timings)]
            single = True
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"chowkit: error: {exc}\n")
        return 2
    _emit(reports, fmt, single, out)
    failed = [r.case for r in reports if not r.passed]
    if failed:
        err.write("failing cases: " + ", ".join(failed) + "\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
