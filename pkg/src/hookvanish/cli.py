"""Command-line front end: ``hookvanish {vanish,audit,schur,dominance,ns,sweep}``.

JSON is the machine contract (objects carry a ``schema`` field); ``table`` is
for people; ``csv`` is offered where output is row-shaped.  Exit codes: 0 ok,
1 invalid input, 2 an audit failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import config
from .audit import AuditParams, full_audit, ns_table
from .errors import HookVanishError
from .partitions import Partition, dominates
from .schur import (
    SchurVector,
    branch_direct_sum,
    dimension,
    lr_product,
    one_dim_multiplicity,
    oracle_product_monomial,
    tensor_power,
)
from .vanishing import VanishingQuery, evaluate

SWEEP_SCHEMA = "hookvanish.sweep/1"


class UsageError(HookVanishError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _table(rows: list[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# -- single-shot commands ---------------------------------------------------------

def _vanish_row(rep) -> dict:
    js = rep.to_json()
    conds = js["conditions"] or [None] * 4
    row = dict(js["query"])
    row.update(
        gamma_nonzero=js["gamma_nonzero"], r=js["r"], threshold=js["threshold"],
        cond1=conds[0], cond2=conds[1], cond3=conds[2], cond4=conds[3],
        guaranteed_pq=js["guaranteed_pq"], guaranteed_qp=js["guaranteed_qp"], theorem=js["theorem"],
    )
    return row


def cmd_vanish(args) -> int:
    query = VanishingQuery(args.n, args.e, args.k, args.m, args.alpha, args.p, args.q)
    rep = evaluate(query)
    if args.format == "json":
        print(_dump(rep.to_json()))
    else:
        row = _vanish_row(rep)
        if args.format == "csv":
            print(_csv(list(row), [list(row.values())]))
        else:
            print(_table([(k, v) for k, v in row.items()] + [("notes", "; ".join(rep.notes))]))
    return 0


def cmd_audit(args) -> int:
    params = AuditParams(args.n, args.e, args.k, args.m, args.alpha0, args.p0, args.q0, args.mode)
    rep = full_audit(params)
    if args.format == "json":
        print(_dump(rep.to_json()))
    elif args.format == "csv":
        print(_csv(["check", "pass", "cases", "failures"],
                   [[c.name, c.passed, c.cases, len(c.witnesses)] for c in rep.checks]))
    else:
        rows = [("params", params), ("r0", params.r0), ("b_size", rep.b_size)]
        rows += [(c.name, f"{'PASS' if c.passed else 'FAIL'} ({c.cases} cases)") for c in rep.checks]
        print(_table(rows))
        for c in rep.checks:
            for w in c.witnesses[:5]:
                print(f"  {c.name}: {w}")
    return 0 if rep.passed else 2


def cmd_schur(args) -> int:
    if args.product:
        a, b = (Partition.parse(x) for x in args.product)
        vec = lr_product(SchurVector.basis(a, args.rank), SchurVector.basis(b, args.rank))
    elif args.oracle:
        a, b = (Partition.parse(x) for x in args.oracle)
        vec = oracle_product_monomial(a, b, args.rank)
    elif args.power:
        vec = tensor_power(Partition.parse(args.power), args.times, args.rank)
    elif args.dim is not None:
        value = dimension(Partition.parse(args.dim), args.rank)
        print(value if args.format != "json" else _dump({"partition": args.dim, "rank": args.rank, "dimension": value}))
        return 0
    elif args.one_dim is not None:
        value = one_dim_multiplicity(Partition.parse(args.one_dim), args.times, args.rank)
        print(value if args.format != "json" else _dump({"partition": args.one_dim, "times": args.times,
                                                          "rank": args.rank, "multiplicity": value}))
        return 0
    else:
        part = Partition.parse(args.branch)
        out = branch_direct_sum(part, args.ea, args.eb)
        rows = [[str(j), str(k), m] for (j, k), m in out.items()]
        if args.format == "json":
            print(_dump([{"a": j, "b": k, "mult": m} for j, k, m in rows]))
        else:
            print(_csv(["a", "b", "mult"], rows))
        return 0
    if args.format == "json":
        print(_dump(vec.to_json()))
    elif args.format == "csv":
        print(_csv(["partition", "mult"], [[str(p), m] for p, m in vec.items()]))
    else:
        print(vec)
    return 0


def cmd_dominance(args) -> int:
    big, small = Partition.parse(args.first), Partition.parse(args.second)
    rel = dominates(big, small).value
    if args.format == "json":
        print(_dump({"first": str(big), "second": str(small), "relation": rel}))
    else:
        print(rel)
    return 0


def cmd_ns(args) -> int:
    table = ns_table(args.r)
    rows = [[s, a, table(s, a)] for s in range(args.r + 1) for a in range(len(table.table[s])) if table(s, a)]
    if args.format == "json":
        print(_dump({"r": args.r, "entries": [{"s": s, "a": a, "n": v} for s, a, v in rows]}))
    elif args.format == "csv":
        print(_csv(["s", "a", "n"], rows))
    else:
        for s in range(args.r + 1):
            print(f"s={s}: " + " ".join(f"{a}:{table(s, a)}" for a in range(len(table.table[s])) if table(s, a)))
    return 0


# -- sweeps ---------------------------------------------------------------------

_BOUND = re.compile(r"^\s*(?:(-?\d+)|([a-z][a-z0-9]*)\s*(?:([+-])\s*(\d+))?)\s*$")


def _bound(text: str, env: dict[str, int]) -> int:
    m = _BOUND.match(text)
    if not m:
        raise UsageError(f"bad range bound {text!r}")
    if m.group(1) is not None:
        return int(m.group(1))
    name = m.group(2)
    if name not in env:
        raise UsageError(f"range bound refers to unknown or later parameter {name!r}")
    value = env[name]
    if m.group(3):
        value += int(m.group(4)) if m.group(3) == "+" else -int(m.group(4))
    return value


def parse_range(text: str, env: dict[str, int]) -> list[int]:
    """``"a..b"`` (inclusive), ``"a,b,c"`` or ``"a"``; bounds may name earlier parameters, e.g. ``0..k-1``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(_bound(lo, env), _bound(hi, env) + 1))
    return [_bound(tok, env) for tok in text.split(",")]


def _expand(order: Sequence[str], specs: dict[str, str]) -> list[dict[str, int]]:
    points: list[dict[str, int]] = []

    def rec(i: int, env: dict[str, int]):
        if len(points) > config.SWEEP_MAX_POINTS:
            raise UsageError(f"grid exceeds SWEEP_MAX_POINTS={config.SWEEP_MAX_POINTS}")
        if i == len(order):
            points.append(dict(env))
            return
        name = order[i]
        for v in parse_range(specs[name], env):
            env[name] = v
            rec(i + 1, env)
        env.pop(name, None)

    rec(0, {})
    return points


VANISH_ORDER = ("n", "e", "k", "m", "alpha", "p", "q")
AUDIT_ORDER = ("n", "e", "k", "m", "alpha0", "p0", "q0")
VANISH_HEADER = ["n", "e", "k", "m", "alpha", "p", "q", "gamma_nonzero", "r", "threshold",
                 "cond1", "cond2", "cond3", "cond4", "guaranteed_pq", "guaranteed_qp", "theorem"]
AUDIT_HEADER = ["n", "e", "k", "m", "alpha0", "p0", "q0", "mode", "r0", "b_size", "pass", "failed_checks"]


def _vanish_point(pt: dict) -> list | None:
    if pt["k"] // pt["m"] < 1:
        return None
    try:
        rep = evaluate(VanishingQuery(**pt))
    except HookVanishError:
        return None
    row = _vanish_row(rep)
    return [row[h] for h in VANISH_HEADER]


def _audit_point(pt: dict) -> list | None:
    if pt["k"] // pt["m"] < 1:
        return None
    try:
        params = AuditParams(**pt)
    except HookVanishError:
        return None
    rep = full_audit(params)
    failed = ";".join(c.name for c in rep.checks if not c.passed)
    return [params.n, params.e, params.k, params.m, params.alpha0, params.p0, params.q0, params.mode,
            params.r0, rep.b_size, rep.passed, failed]


def run_sweep(kind: str, specs: dict[str, str], modes: Sequence[str], workers: int = 1) -> tuple[list[str], list[list]]:
    """Evaluate every grid point; rows come back in grid order whatever ``workers`` is."""
    if kind == "vanish":
        order, header, fn = VANISH_ORDER, VANISH_HEADER, _vanish_point
        points = _expand(order, specs)
    else:
        order, header, fn = AUDIT_ORDER, AUDIT_HEADER, _audit_point
        points = [dict(pt, mode=mode) for pt in _expand(order, specs) for mode in modes]
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, points, chunksize=max(1, len(points) // (workers * 8))))
    else:
        results = [fn(pt) for pt in points]
    return header, [r for r in results if r is not None]


def cmd_sweep(args) -> int:
    defaults = {"alpha": "0..k-1", "alpha0": "0..k-1", "p": "0..n", "q": "0..n", "p0": "0..n", "q0": "0..n"}
    order = VANISH_ORDER if args.kind == "vanish" else AUDIT_ORDER
    specs = {}
    for name in order:
        given = getattr(args, name, None)
        if given is None:
            given = defaults.get(name)
        if given is None:
            raise UsageError(f"sweep {args.kind} needs --{name}")
        specs[name] = given
    modes = ("p", "q") if args.mode == "both" else (args.mode,)
    header, rows = run_sweep(args.kind, specs, modes, args.workers)
    if args.format == "json":
        print(_dump({"schema": SWEEP_SCHEMA, "kind": args.kind, "columns": header, "rows": rows}))
    elif args.format == "table":
        if rows:
            print(_table([(" ".join(map(str, r[:len(order)])), " ".join(map(str, r[len(order):]))) for r in rows]))
    elif rows:
        print(_csv(header, rows))
    if args.kind == "audit" and any(not r[AUDIT_HEADER.index("pass")] for r in rows):
        return 2
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hookvanish", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("json", "table", "csv"), default="json"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("vanish", help="vanishing report for one query")
    for name in VANISH_ORDER:
        p.add_argument(f"--{name}", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("audit", help="audit the induction bookkeeping for one parameter set")
    for name in AUDIT_ORDER:
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--mode", choices=("p", "q"), default="p")
    fmt(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("schur", help="Schur-basis products, powers, dimensions, branching")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--product", nargs=2, metavar=("I", "J"))
    g.add_argument("--oracle", nargs=2, metavar=("I", "J"), help="product via the monomial oracle")
    g.add_argument("--power", metavar="I")
    g.add_argument("--one-dim", metavar="I", dest="one_dim")
    g.add_argument("--dim", metavar="I")
    g.add_argument("--branch", metavar="I")
    p.add_argument("--rank", type=int)
    p.add_argument("--times", type=int, default=1)
    p.add_argument("--ea", type=int)
    p.add_argument("--eb", type=int)
    fmt(p)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("dominance", help="scaled dominance relation between two partitions")
    p.add_argument("first")
    p.add_argument("second")
    fmt(p, default="table")
    p.set_defaults(func=cmd_dominance)

    p = sub.add_parser("ns", help="multiplicity table n_s(a) for one r")
    p.add_argument("--r", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_ns)

    p = sub.add_parser("sweep", help="grid sweep of vanish or audit, one row per point")
    p.add_argument("kind", choices=("vanish", "audit"))
    for name in dict.fromkeys(VANISH_ORDER + AUDIT_ORDER):
        p.add_argument(f"--{name}", metavar="RANGE")
    p.add_argument("--mode", choices=("p", "q", "both"), default="both")
    p.add_argument("--workers", type=int, default=1)
    fmt(p, default="csv")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "schur":
        needs_rank = not args.branch
        if needs_rank and args.rank is None:
            parser.error("--rank is required")
        if args.branch and (args.ea is None or args.eb is None):
            parser.error("--branch needs --ea and --eb")
    try:
        return args.func(args)
    except HookVanishError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
