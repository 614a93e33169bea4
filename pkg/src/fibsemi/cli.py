"""Command-line front end.

Subcommands: ``info`` (one-parameter report), ``apery`` (residue table),
``table`` (range sweep), ``verify`` (closed forms against the brute-force
oracle), ``semigroup`` (invariants of an arbitrary coprime generator list).
Output is text, CSV, or JSON; every number is printed as an exact decimal
integer, never a float.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error,
3 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import fib_family
from .fib_family import DEFAULT_TABLE_BOUND, FamilySummary, TableTooLarge
from .fibonacci import beta, fib
from .semigroup_core import NumericalSemigroup, ResourceLimit, SemigroupError

__all__ = [
    "main",
    "build_parser",
    "RunConfig",
    "InvalidRange",
    "EXIT_OK",
    "EXIT_MISMATCH",
    "EXIT_USAGE",
    "EXIT_RESOURCE",
]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENV_PREFIX = "FIBSEMI_"
DEFAULT_SWEEP_BOUND = 1_000_000  # largest f_a the verify oracle will attempt

TABLE_FIELDS = ("a", "m", "e", "frobenius", "genus", "n", "wilf_slack")


class InvalidRange(SemigroupError):
    """A range command received a_min > a_max."""


@dataclass(frozen=True)
class RunConfig:
    format: str = "text"
    oracle_bound: int = DEFAULT_SWEEP_BOUND
    table_bound: int = DEFAULT_TABLE_BOUND
    parallel: bool = False


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _env_bound(name: str) -> int | None:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise SemigroupError(
            f"environment override {ENV_PREFIX}{name} must be an integer, got {raw!r}"
        )
    if value <= 0:
        raise SemigroupError(
            f"environment override {ENV_PREFIX}{name} must be positive, got {value}"
        )
    return value


def _config_from(args: argparse.Namespace) -> RunConfig:
    # precedence: flag, then environment, then built-in default
    oracle = args.oracle_bound
    if oracle is None:
        oracle = _env_bound("ORACLE_BOUND")
    if oracle is None:
        oracle = DEFAULT_SWEEP_BOUND
    table = args.table_bound
    if table is None:
        table = _env_bound("TABLE_BOUND")
    if table is None:
        table = DEFAULT_TABLE_BOUND
    return RunConfig(
        format=args.format,
        oracle_bound=oracle,
        table_bound=table,
        parallel=args.parallel,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "csv", "json"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--oracle-bound", type=_positive, default=None, metavar="N",
        help=f"largest multiplicity the brute-force oracle will attempt "
             f"(default {DEFAULT_SWEEP_BOUND}, env {ENV_PREFIX}ORACLE_BOUND)",
    )
    common.add_argument(
        "--table-bound", type=_positive, default=None, metavar="N",
        help=f"largest residue table that will be materialized "
             f"(default {DEFAULT_TABLE_BOUND}, env {ENV_PREFIX}TABLE_BOUND)",
    )
    common.add_argument(
        "--parallel", action="store_true",
        help="evaluate independent parameters concurrently (output order is unchanged)",
    )

    parser = argparse.ArgumentParser(
        prog="fibsemi",
        description="Numerical-semigroup invariants for Fibonacci-shift generator "
                    "families, with a brute-force cross-check oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common],
                       help="closed-form invariants for one parameter")
    p.add_argument("a", type=_nonneg)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("apery", parents=[common],
                       help="residue table (x, beta(x), w(x)) at the multiplicity")
    p.add_argument("a", type=_nonneg)
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("table", parents=[common],
                       help="one summary record per parameter in a range")
    p.add_argument("a_min", type=_nonneg)
    p.add_argument("a_max", type=_nonneg)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common],
                       help="check every closed form against the brute-force oracle")
    p.add_argument("a_max", type=_nonneg)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("semigroup", parents=[common],
                       help="oracle invariants of an arbitrary generator list")
    p.add_argument("generators", type=int, nargs="+")
    p.set_defaults(func=cmd_semigroup)

    return parser


# -- shared rendering ------------------------------------------------------

def _record(s: FamilySummary) -> dict[str, int]:
    return {
        "a": s.a,
        "m": s.multiplicity,
        "e": s.embedding_dimension,
        "frobenius": s.frobenius,
        "genus": s.genus,
        "n": s.n_count,
        "wilf_slack": s.wilf_slack,
    }


def _write_csv(fields: tuple[str, ...], rows: list[dict]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_cell(row[k]) for k in fields])


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _write_json(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _write_kv_text(pairs: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k.ljust(width)}  {_cell(v)}")


# -- subcommands -----------------------------------------------------------

def cmd_info(args: argparse.Namespace, cfg: RunConfig) -> int:
    s = fib_family.family_summary(args.a)
    if cfg.format == "json":
        payload = _record(s)
        payload["generators"] = list(s.generators)
        _write_json(payload)
    elif cfg.format == "csv":
        row = _record(s)
        row["generators"] = s.generators
        _write_csv(TABLE_FIELDS + ("generators",), [row])
    else:
        _write_kv_text([
            ("a", s.a),
            ("generators", s.generators),
            ("multiplicity", s.multiplicity),
            ("embedding_dimension", s.embedding_dimension),
            ("frobenius", s.frobenius),
            ("genus", s.genus),
            ("n", s.n_count),
            ("wilf_slack", s.wilf_slack),
        ])
    return EXIT_OK


def cmd_apery(args: argparse.Namespace, cfg: RunConfig) -> int:
    table = fib_family.family_apery(args.a, table_bound=cfg.table_bound)
    rows = [{"x": x, "beta": beta(x), "w": w} for x, w in enumerate(table.w)]
    if cfg.format == "json":
        _write_json(rows)
    elif cfg.format == "csv":
        _write_csv(("x", "beta", "w"), rows)
    else:
        xw = max(len(str(table.n - 1)), 1)
        ww = max(len(str(max(table.w))), 1)
        for r in rows:
            print(f"{r['x']:>{xw}}  {r['beta']:>2}  {r['w']:>{ww}}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.a_min > args.a_max:
        raise InvalidRange(f"a_min {args.a_min} exceeds a_max {args.a_max}")
    params = range(args.a_min, args.a_max + 1)
    if cfg.parallel:
        with ThreadPoolExecutor() as pool:
            summaries = list(pool.map(fib_family.family_summary, params))
    else:
        summaries = [fib_family.family_summary(a) for a in params]
    rows = [_record(s) for s in summaries]
    if cfg.format == "json":
        _write_json(rows)
    elif cfg.format == "csv":
        _write_csv(TABLE_FIELDS, rows)
    else:
        widths = {
            k: max(len(k), max(len(str(r[k])) for r in rows)) for k in TABLE_FIELDS
        }
        print("  ".join(k.rjust(widths[k]) for k in TABLE_FIELDS))
        for r in rows:
            print("  ".join(str(r[k]).rjust(widths[k]) for k in TABLE_FIELDS))
    return EXIT_OK


@dataclass
class _VerifyOutcome:
    a: int
    record: dict
    failures: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    ms: int = 0


def _verify_one(a: int, cfg: RunConfig) -> _VerifyOutcome:
    """Run every check available for one parameter.

    Closed forms are read through the module namespace so a perturbed
    function is actually exercised.  A resource limit marks a check skipped,
    never failed.
    """
    t0 = time.perf_counter()
    gens = fib_family.family_generators(a)
    m, e = gens[0], len(gens)
    f = fib_family.family_frobenius(a)
    g = fib_family.family_genus(a)
    n = f + 1 - g
    slack = e * n - (f + 1)
    fa = fib(a)
    out = _VerifyOutcome(a=a, record={
        "a": a, "m": m, "e": e, "frobenius": f, "genus": g,
        "n": n, "wilf_slack": slack,
    })

    def check(label: str, ok: bool) -> None:
        if not ok:
            out.failures.append(label)

    check("genus-binomial-sum", g == fib_family.family_genus_sum(a))
    check("frobenius-via-e-m", f == (e // 2) * m - 1)
    check("n-count-nonnegative", n >= 0)
    check("wilf-slack-nonnegative", slack >= 0)
    if a >= 5:
        check("genus-recurrence", fib_family.family_genus_recurrence_check(a))
    if a <= 25:
        check("zeckendorf-bijection", fib_family.zeckendorf_bijection_check(a))

    family_table = None
    if fa <= cfg.table_bound:
        family_table = fib_family.family_apery(a, table_bound=cfg.table_bound)
        check("apery-max-frobenius", max(family_table.w) - fa == f)
        check("apery-beta-sum-genus",
              sum((w - x) // fa for x, w in enumerate(family_table.w)) == g)
    else:
        out.skipped.append("apery-table")

    if fa <= cfg.oracle_bound:
        try:
            oracle = NumericalSemigroup(gens)
            check("oracle-multiplicity", oracle.multiplicity == m)
            check("oracle-frobenius", oracle.frobenius() == f)
            check("oracle-genus", oracle.genus() == g)
            check("oracle-n-count", oracle.n_count() == n)
            check("oracle-minimal-generators", oracle.minimal_generators() == gens)
            if family_table is not None:
                check("oracle-apery-table", oracle.apery(fa) == family_table)
        except ResourceLimit as exc:
            out.skipped.append(f"oracle ({exc})")
    else:
        out.skipped.append("oracle")

    out.ms = int((time.perf_counter() - t0) * 1000)
    return out


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    params = range(3, args.a_max + 1)
    if cfg.parallel:
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(lambda a: _verify_one(a, cfg), params))
    else:
        outcomes = [_verify_one(a, cfg) for a in params]

    failed = [o for o in outcomes if o.failures]
    detail = sys.stdout if cfg.format == "text" else sys.stderr

    if cfg.format == "text":
        for o in outcomes:
            status = "FAIL" if o.failures else "ok"
            line = f"a={o.a} m={o.record['m']} {status}"
            if o.skipped:
                line += f" skipped[{', '.join(o.skipped)}]"
            print(f"{line} {o.ms}ms")
            for label in o.failures:
                print(f"  mismatch: {label}")
    else:
        rows = []
        for o in outcomes:
            row = dict(o.record)
            row["verified"] = not o.failures
            rows.append(row)
        if cfg.format == "csv":
            _write_csv(TABLE_FIELDS + ("verified",), rows)
        else:
            _write_json(rows)
        for o in failed:
            for label in o.failures:
                print(f"a={o.a} mismatch: {label}", file=detail)

    total_ms = sum(o.ms for o in outcomes)
    print(
        f"verify: {len(outcomes)} parameters, {len(outcomes) - len(failed)} ok, "
        f"{len(failed)} failed, {total_ms}ms",
        file=detail,
    )
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_semigroup(args: argparse.Namespace, cfg: RunConfig) -> int:
    sg = NumericalSemigroup(args.generators)
    summary = sg.summary()
    wilf = sg.wilf_check()
    gaps = sg.gaps()
    msg = sg.minimal_generators()
    if cfg.format == "json":
        _write_json({
            "generators": list(sg.generators),
            "minimal_generators": list(msg),
            "m": summary.multiplicity,
            "e": summary.embedding_dimension,
            "frobenius": summary.frobenius,
            "genus": summary.genus,
            "n": summary.n_count,
            "wilf_holds": wilf.holds,
            "wilf_slack": wilf.slack,
            "gaps": gaps,
        })
    elif cfg.format == "csv":
        fields = ("m", "e", "frobenius", "genus", "n", "wilf_holds",
                  "wilf_slack", "minimal_generators", "gaps")
        row = {
            "m": summary.multiplicity,
            "e": summary.embedding_dimension,
            "frobenius": summary.frobenius,
            "genus": summary.genus,
            "n": summary.n_count,
            "wilf_holds": wilf.holds,
            "wilf_slack": wilf.slack,
            "minimal_generators": msg,
            "gaps": gaps,
        }
        _write_csv(fields, [row])
    else:
        _write_kv_text([
            ("generators", sg.generators),
            ("minimal_generators", msg),
            ("multiplicity", summary.multiplicity),
            ("embedding_dimension", summary.embedding_dimension),
            ("frobenius", summary.frobenius),
            ("genus", summary.genus),
            ("n", summary.n_count),
            ("wilf_holds", wilf.holds),
            ("wilf_slack", wilf.slack),
            ("gaps", gaps),
        ])
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from(args)
        return args.func(args, cfg)
    except ResourceLimit as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        if isinstance(exc, TableTooLarge):
            print("hint: raise --table-bound to materialize larger tables",
                  file=sys.stderr)
        return EXIT_RESOURCE
    except SemigroupError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
