"""Command-line frontend.

Subcommands: seq, decompose, semigroup, family, verify, wilf.  Results
are wrapped in a deterministic envelope on stdout (JSON by default;
integers serialize as decimal strings since values can exceed 64 bits).
Diagnostics go to stderr.  Exit codes: 0 ok, 1 verification mismatch,
2 usage error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from . import families, zeckendorf
from .semigroup import DEFAULT_TABLE_BOUND, NumericalSemigroup, TableBoundExceeded
from .sequences import fibonacci, lucas, lucas_tilde

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENV_ORACLE_BOUND = "LUCAS_ORACLE_BOUND"


class UsageError(ValueError):
    """Bad argument values detected after parsing."""


def _stringify(obj):
    """Render all ints (except bools) as decimal strings, recursively."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    return obj


def _flatten(value) -> str:
    if isinstance(value, list):
        return ";".join(_flatten(v) for v in value)
    if value is None:
        return ""
    return str(value)


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_stringify(envelope), indent=2)
    result = envelope["result"]
    rows = result.get("rows") if isinstance(result, dict) else None
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if rows:
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow(_flatten(v) for v in row.values())
        else:
            writer.writerow(["key", "value"])
            for k, v in result.items():
                writer.writerow([k, _flatten(v)])
        return buf.getvalue().rstrip("\n")
    # plain text
    lines = []
    if rows:
        for row in rows:
            lines.append("  ".join(f"{k}={_flatten(v)}" for k, v in row.items()))
        extra = {k: v for k, v in result.items() if k != "rows"}
        for k, v in extra.items():
            lines.append(f"{k}: {_flatten(v)}")
    else:
        for k, v in result.items():
            lines.append(f"{k}: {_flatten(v)}")
    return "\n".join(lines)


def _oracle_bound(args) -> int:
    if args.oracle_bound is not None:
        return args.oracle_bound
    env = os.environ.get(ENV_ORACLE_BOUND)
    if env:
        return int(env)
    return DEFAULT_TABLE_BOUND


# -- subcommand handlers (return (result, exit_code)) ----------------------


def _cmd_seq(args):
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    fn = {"lucas": lucas, "lucas_tilde": lucas_tilde, "fibonacci": fibonacci}[args.kind]
    values = [fn(i) for i in range(args.count)]
    return {"kind": args.kind, "count": args.count, "values": values}, EXIT_OK


def _cmd_decompose(args):
    if args.x < 0:
        raise UsageError("x must be >= 0")
    dec = zeckendorf.decompose(args.x)
    return {
        "x": dec.x,
        "indices": list(dec.indices),
        "beta": dec.beta,
        "gamma": dec.gamma,
    }, EXIT_OK


def _semigroup_payload(s: NumericalSemigroup) -> dict:
    msg = s.minimal_generators()
    return {
        "generators": s.generators,
        "msg": msg,
        "e": len(msg),
        "m": s.multiplicity,
        "F": s.frobenius(),
        "g": s.genus(),
        "n": s.sporadic_count(),
        "wilf": s.wilf_check(),
    }


def _cmd_semigroup(args):
    try:
        gens = [int(g) for g in args.gens.split(",") if g.strip()]
    except ValueError as exc:
        raise UsageError(f"bad generator list {args.gens!r}") from exc
    if not gens:
        raise UsageError("--gens must list at least one generator")
    s = NumericalSemigroup(gens, table_bound=_oracle_bound(args))
    return _semigroup_payload(s), EXIT_OK


def _report_payload(rep: families.FamilyReport) -> dict:
    return asdict(rep)


def _cmd_family(args):
    bound = _oracle_bound(args)
    mode = "both"
    if args.closed:
        mode = "closed"
    elif args.oracle:
        mode = "oracle"
    if mode == "oracle":
        rep = families.oracle_report(args.family, args.a, table_bound=bound)
    else:
        rep = families.report(
            args.family, args.a, use_oracle=(mode == "both"), table_bound=bound
        )
    payload = _report_payload(rep)
    if args.emit_apery:
        if rep.family == "S" and args.a >= 2 and mode != "oracle":
            if rep.m > bound:
                raise TableBoundExceeded(
                    f"Apery table for n={rep.m} exceeds bound {bound}"
                )
            payload["apery"] = list(families.apery_closed_form(args.a).w)
        else:
            builder = families.build_S if rep.family == "S" else families.build_T
            payload["apery"] = list(builder(args.a, table_bound=bound).apery().w)
    code = EXIT_MISMATCH if (mode == "both" and rep.mismatches) else EXIT_OK
    return payload, code


def _verify_row(task) -> dict:
    family, a, bound = task
    rep = families.report(family, a, use_oracle=True, table_bound=bound)
    mismatches = list(rep.mismatches)
    if family == "T" and a >= 3 and not families.check_S_T_decomposition(a, bound):
        mismatches.append("S=T+{l_a,2l_a+1} set identity failed")
    return {"family": family, "a": a, "ok": not mismatches, "mismatches": mismatches}


def _cmd_verify(args):
    if args.from_a > args.to_a:
        raise UsageError("--from must be <= --to")
    if args.from_a < 0:
        raise UsageError("--from must be >= 0")
    bound = _oracle_bound(args)
    fams = ["S", "T"] if args.family == "both" else [args.family]
    tasks = [
        (fam, a, bound) for fam in fams for a in range(args.from_a, args.to_a + 1)
    ]
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_verify_row, tasks))
    else:
        rows = [_verify_row(t) for t in tasks]
    all_pass = all(r["ok"] for r in rows)
    return {"rows": rows, "all_pass": all_pass}, (
        EXIT_OK if all_pass else EXIT_MISMATCH
    )


def _cmd_wilf(args):
    if args.max_a < 0:
        raise UsageError("--max must be >= 0")
    rows = []
    for a in range(args.max_a + 1):
        rep = families.report(args.family, a, table_bound=_oracle_bound(args))
        rows.append(
            {
                "a": a,
                "F_plus_1": rep.F + 1,
                "e_times_n": rep.e * rep.n_count,
                "ok": rep.wilf_ok,
            }
        )
    all_pass = all(r["ok"] for r in rows)
    return {"rows": rows, "all_pass": all_pass}, (
        EXIT_OK if all_pass else EXIT_MISMATCH
    )


# -- parser -----------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=["json", "csv", "text"], default="json", dest="format"
    )
    p.add_argument(
        "--oracle-bound",
        type=int,
        default=None,
        help=f"max Apery table size (default {DEFAULT_TABLE_BOUND}, "
        f"env {ENV_ORACLE_BOUND})",
    )
    p.add_argument(
        "--timing",
        action="store_true",
        help="include elapsed_ms in the envelope (breaks byte-identical reruns)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucasfrob",
        description="Frobenius problem for Lucas-shifted semigroup families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="emit sequence values")
    p.add_argument("--kind", choices=["lucas", "lucas_tilde", "fibonacci"], required=True)
    p.add_argument("--count", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("decompose", help="Zeckendorf-Lucas decomposition")
    p.add_argument("x", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("semigroup", help="oracle invariants of an arbitrary semigroup")
    p.add_argument("--gens", required=True, help="comma-separated generators")
    _add_common(p)
    p.set_defaults(handler=_cmd_semigroup)

    p = sub.add_parser("family", help="report for S(a) or T(a)")
    p.add_argument("family", choices=["S", "T"])
    p.add_argument("a", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true", help="closed forms only")
    mode.add_argument("--oracle", action="store_true", help="oracle only")
    mode.add_argument(
        "--both", action="store_true", help="closed forms cross-checked (default)"
    )
    p.add_argument("--emit-apery", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("verify", help="batch closed-form vs oracle harness")
    p.add_argument("--from", dest="from_a", type=int, required=True)
    p.add_argument("--to", dest="to_a", type=int, required=True)
    p.add_argument("--family", choices=["S", "T", "both"], default="both")
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("wilf", help="Wilf inequality table from closed forms")
    p.add_argument("--max", dest="max_a", type=int, required=True)
    p.add_argument("--family", choices=["S", "T"], default="S")
    _add_common(p)
    p.set_defaults(handler=_cmd_wilf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result, code = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TableBoundExceeded as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = int((time.perf_counter() - start) * 1000)

    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("handler", "command", "format", "timing", "oracle_bound")
        and v is not None
    }
    envelope = {"command": args.command, "parameters": params, "result": result}
    if args.timing:
        envelope["elapsed_ms"] = elapsed_ms
    print(render(envelope, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
