"""Command-line front end.

Subcommands:

* ``compute`` — emit a number table by any method (or all of them) as CSV or
  JSON records ``family,N,n,method,value`` with exact ``p/q`` values.
* ``table1`` — recompute the published 7 x 8 table and diff it against the
  embedded golden copy.
* ``verify`` — run identity suites and emit a JSON report.

Exit codes: 0 success, 2 invalid parameters, 3 method disagreement or golden
table mismatch, 4 identity suite failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import closed_forms, identities
from .exact import InvalidParameter, ONE, ZERO
from .families import FamilyId, FamilyKind, table, via_series
from .goldens import TABLE1, TABLE1_N_MAX, TABLE1_NMAX
from .identities import IdentityReport

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_VERIFY_FAILED = 4

_EULER_KINDS = (FamilyKind.HG_EULER, FamilyKind.COMP_HG_EULER)

_METHODS = ("recurrence", "series", "explicit", "binomial", "det", "trudi")


def format_rational(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class OutputRecord:
    family: str
    N: int
    n: int
    method: str
    value: str


def _methods_for(kind: FamilyKind) -> tuple[str, ...]:
    if kind in _EULER_KINDS:
        return _METHODS
    return ("recurrence", "series", "det", "trudi")


def _per_index_route(kind: FamilyKind, method: str) -> Callable[[int, int], Fraction]:
    if kind is FamilyKind.HG_EULER:
        return {
            "explicit": closed_forms.hg_euler_explicit,
            "binomial": closed_forms.hg_euler_binomial,
            "det": closed_forms.hg_euler_det,
            "trudi": closed_forms.hg_euler_trudi,
        }[method]
    if kind is FamilyKind.COMP_HG_EULER:
        return {
            "explicit": closed_forms.comp_hg_euler_explicit,
            "binomial": closed_forms.comp_hg_euler_binomial,
            "det": closed_forms.comp_hg_euler_det,
            "trudi": closed_forms.comp_hg_euler_trudi,
        }[method]
    if kind is FamilyKind.HG_BERNOULLI:
        return {
            "det": closed_forms.hg_bernoulli_det,
            "trudi": closed_forms.hg_bernoulli_det,
        }[method]
    return {
        "det": closed_forms.hg_cauchy_det,
        "trudi": closed_forms.hg_cauchy_det,
    }[method]


def compute_values(kind: FamilyKind, N: int, nmax: int, method: str) -> list[Fraction]:
    """Values v_0..v_nmax of the family by the requested method."""
    if method not in _methods_for(kind):
        raise InvalidParameter(f"method {method} is not defined for {kind.value}")
    fam = FamilyId(kind, N)
    if method == "recurrence":
        return list(table(fam, nmax).values)
    if method == "series":
        return list(via_series(fam, nmax).values)
    route = _per_index_route(kind, method)
    out: list[Fraction] = []
    for n in range(nmax + 1):
        if n == 0:
            out.append(ONE)
        elif kind in _EULER_KINDS and n % 2 == 1:
            out.append(ZERO)
        elif method == "explicit":
            out.append(route(n=n, N=N, cap=max(nmax, closed_forms.DEFAULT_COMPOSITION_CAP)))
        else:
            out.append(route(N, n))
    return out


def _write_records(records: list[OutputRecord], fmt: str, out_path: str | None) -> None:
    records = sorted(records, key=lambda r: (r.family, r.N, r.n, r.method))
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf)
        writer.writerow(["family", "N", "n", "method", "value"])
        for r in records:
            writer.writerow([r.family, r.N, r.n, r.method, r.value])
    else:
        json.dump([r.__dict__ for r in records], buf, indent=2)
        buf.write("\n")
    _emit(buf.getvalue(), out_path)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    kind = FamilyKind(args.family)
    methods = _methods_for(kind) if args.method == "all" else (args.method,)
    try:
        per_method = {m: compute_values(kind, args.N, args.max_n, m) for m in methods}
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    records = [
        OutputRecord(kind.value, args.N, n, m, format_rational(vals[n]))
        for m, vals in per_method.items()
        for n in range(args.max_n + 1)
    ]
    _write_records(records, args.format, args.out)
    if args.method == "all":
        baseline = per_method[methods[0]]
        for m, vals in per_method.items():
            for n, (a, b) in enumerate(zip(baseline, vals)):
                if a != b:
                    print(
                        f"disagreement at n={n}: {methods[0]}={format_rational(a)} "
                        f"{m}={format_rational(b)}",
                        file=sys.stderr,
                    )
                    return EXIT_MISMATCH
    return EXIT_OK


def cmd_table1(args: argparse.Namespace) -> int:
    lines = []
    mismatches = []
    header = ["n"] + [str(n) for n in range(0, TABLE1_NMAX + 1, 2)]
    lines.append("\t".join(header))
    for N in range(TABLE1_N_MAX + 1):
        vals = compute_values(FamilyKind.HG_EULER, N, TABLE1_NMAX, "recurrence")
        row = [f"E_{N}"]
        for n in range(0, TABLE1_NMAX + 1, 2):
            got = vals[n]
            row.append(format_rational(got))
            want = TABLE1[(N, n)]
            if got != want:
                mismatches.append(
                    f"(N={N}, n={n}): computed {format_rational(got)}, "
                    f"golden {format_rational(want)}"
                )
        lines.append("\t".join(row))
    _emit("\n".join(lines) + "\n", args.out)
    if mismatches:
        for m in mismatches:
            print(f"diff: {m}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _suite_registry() -> dict[str, Callable[[int | None], list[IdentityReport]]]:
    def one(fn, default):
        return lambda nmax: [fn(nmax if nmax is not None else default)]

    def per_n(fn, default, ns=range(1, 7)):
        return lambda nmax: [fn(N, nmax if nmax is not None else default) for N in ns]

    return {
        "euler-pair-sum": one(identities.check_euler_pair_sum, 20),
        "e1-bernoulli": one(identities.check_E1_bernoulli, 60),
        "bernoulli-lemma": one(identities.check_bernoulli_lemma, 30),
        "tangent": one(identities.check_tangent_closed_form, 12),
        "tangent-complex": one(identities.check_tangent_complex_sum, 8),
        "tan-maclaurin": one(identities.check_tan_maclaurin, 12),
        "sumprod-pair": per_n(identities.check_sumprod_pair, 30),
        "sumprod-pair-comp": per_n(identities.check_sumprod_pair_comp, 30),
        "sumprod-trinomial": per_n(identities.check_sumprod_trinomial, 30),
        "sumprod-trinomial-comp": per_n(identities.check_sumprod_trinomial_comp, 30),
        "series-identities": per_n(identities.check_series_identities, 24, range(1, 5)),
    }


def _report_json(report: IdentityReport) -> dict:
    out: dict = {
        "identity": report.identity_id,
        "range": report.range_checked,
        "passed": report.passed,
    }
    if report.first_failure is not None:
        ff = report.first_failure
        out["first_failure"] = {
            "indices": [str(i) for i in ff.indices],
            "lhs": format_rational(ff.lhs),
            "rhs": format_rational(ff.rhs),
        }
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    registry = _suite_registry()
    if args.suite == "all":
        selected = list(registry)
    elif args.suite in registry:
        selected = [args.suite]
    else:
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return EXIT_INVALID
    workers = max(1, int(os.environ.get("HGNUM_THREADS", "1")))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [(name, pool.submit(registry[name], args.max_n)) for name in selected]
        reports = [(name, r) for name, fut in futures for r in fut.result()]
    payload = {
        "suites": [dict(_report_json(r), suite=name) for name, r in reports],
        "passed": all(r.passed for _, r in reports),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    if not payload["passed"]:
        for name, r in reports:
            if not r.passed:
                ff = r.first_failure
                print(
                    f"FAIL {name}/{r.identity_id} at {ff.indices}: "
                    f"lhs={format_rational(ff.lhs)} rhs={format_rational(ff.rhs)}",
                    file=sys.stderr,
                )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgnum")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute a number table")
    p_compute.add_argument("--family", required=True, choices=[k.value for k in FamilyKind])
    p_compute.add_argument("--N", type=int, required=True)
    p_compute.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_compute.add_argument("--method", default="recurrence", choices=_METHODS + ("all",))
    p_compute.add_argument("--format", default="csv", choices=("csv", "json"))
    p_compute.add_argument("--out", default=None)
    p_compute.set_defaults(fn=cmd_compute)

    p_table = sub.add_parser("table1", help="reproduce and diff the published table")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(fn=cmd_table1)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all")
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
