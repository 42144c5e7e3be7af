"""Command-line front end.

Commands:
  spectrum    print the grouped adjacency spectrum of a graph
  bounds      every bound (plus the best) for each k in a range
  oracle      exact alpha_k by branch-and-bound, plus the diameter
  table1      quadratic bound vs exact alpha_2 over the named cubic/planar catalog
  table2      the full bound table for the Johnson graph J(14,7), k = 3..7

Graph sources: --named NAME | --file PATH | --generator SPEC where SPEC is
name:args, e.g. johnson:14,7  gp:10,3  bdm:5  cycle:6  complete:5.

Exit codes: 0 ok, 2 parse/config error, 3 computation failure,
4 oracle budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import bounds as bnd
from . import graphs, oracle, polynomials, spectra
from .errors import GraphConstructionError, KindepError, SizeLimitError, UnknownGraphError

ORACLE_MAX_N = 64

TABLE1_NAMES = [
    "heawood", "desargues", "moebius-kantor", "nauru",
    "pappus", "dodecahedron", "hexahedron", "icosahedron",
]


class ConfigError(KindepError):
    pass


# ---------------------------------------------------------------------------
# argument handling

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kindep",
        description="Spectral upper bounds on the k-independence number of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--named", help="graph from the built-in catalog")
        grp.add_argument("--file", help="path to an edge-list file (n m header)")
        grp.add_argument(
            "--generator",
            help="generator spec name:args (johnson:14,7 gp:10,3 bdm:5 cycle:6 complete:5)",
        )

    def add_common(p, with_k=True):
        if with_k:
            p.add_argument("--k", required=True, help="single value or range a..b")
        p.add_argument("--tol", type=float, default=None,
                       help="eigenvalue grouping tolerance (default 1e-7*max(1,theta_0))")
        p.add_argument("--format", choices=["text", "csv", "json-lines"],
                       default="text")
        p.add_argument("--oracle-budget", type=int, default=oracle.DEFAULT_BUDGET,
                       help="node budget for the exact search")

    p = sub.add_parser("spectrum", help="grouped adjacency spectrum")
    add_source(p)
    add_common(p, with_k=False)

    p = sub.add_parser("bounds", help="all bounds for each k")
    add_source(p)
    add_common(p)

    p = sub.add_parser("oracle", help="exact alpha_k")
    add_source(p)
    add_common(p)

    p = sub.add_parser("table1", help="quadratic bound vs alpha_2, named catalog")
    add_common(p, with_k=False)

    p = sub.add_parser("table2", help="bound table for the Johnson graph J(14,7)")
    add_common(p, with_k=False)
    return parser


def parse_k_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if lo < 1 or hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        k = int(text)
        if k < 1:
            raise ValueError
        return [k]
    except ValueError:
        raise ConfigError(f"bad k range {text!r}; expected N or A..B with 1 <= A <= B")


def parse_generator(spec: str) -> graphs.Graph:
    name, _, argstr = spec.partition(":")
    name = name.strip().lower()
    try:
        args = [int(a) for a in argstr.split(",") if a.strip()] if argstr else []
    except ValueError:
        raise ConfigError(f"generator arguments must be integers: {spec!r}")
    table = {
        "johnson": (graphs.johnson, 2),
        "gp": (graphs.generalized_petersen, 2),
        "bdm": (graphs.bipartite_minus_matching, 1),
        "cycle": (graphs.cycle, 1),
        "complete": (graphs.complete, 1),
    }
    if name not in table:
        raise ConfigError(f"unknown generator {name!r}; known: {', '.join(sorted(table))}")
    fn, nargs = table[name]
    if len(args) != nargs:
        raise ConfigError(f"generator {name!r} takes {nargs} argument(s), got {len(args)}")
    return fn(*args)


def resolve_graph(args) -> graphs.Graph:
    try:
        if args.named:
            return graphs.named(args.named)
        if args.file:
            return graphs.load(args.file)
        return parse_generator(args.generator)
    except (GraphConstructionError, UnknownGraphError, SizeLimitError, OSError) as exc:
        raise ConfigError(str(exc))


# ---------------------------------------------------------------------------
# output rendering

def _real(x: float, fmt: str) -> str:
    if isinstance(x, str):
        return x
    if fmt == "text":
        return f"{x:.6g}"
    return repr(float(x))


def render_rows(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(c, "") for c in columns])
        return buf.getvalue()
    if fmt == "json-lines":
        return "\n".join(json.dumps(row) for row in rows) + "\n"
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
              for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    for row in rows:
        lines.append("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands

def cmd_spectrum(args) -> tuple[str, int]:
    g = resolve_graph(args)
    s = spectra.eigendecompose(g, args.tol)
    if args.format == "json-lines":
        row = {
            "graph": g.name, "n": g.n, "m": g.m,
            "spectrum": [[float(t), int(m)] for t, m in s.distinct()],
        }
        return json.dumps(row) + "\n", 0
    if args.format == "csv":
        rows = [{"graph": g.name, "n": g.n, "theta": repr(t), "multiplicity": m}
                for t, m in s.distinct()]
        return render_rows(rows, ["graph", "n", "theta", "multiplicity"], "csv"), 0
    return f"graph {g.name}: n={g.n} m={g.m}\nspectrum: {s.format()}\n", 0


def _oracle_value(g, k, budget):
    if g.n > ORACLE_MAX_N:
        return ""
    res = oracle.exact_alpha_k(g, k, budget)
    return res.alpha_k if res.exact else ""


def cmd_bounds(args) -> tuple[str, int]:
    g = resolve_graph(args)
    ks = parse_k_range(args.k)
    if any(k > g.n for k in ks):
        raise ConfigError(f"k range exceeds vertex count {g.n}")
    s = spectra.eigendecompose(g, args.tol)
    rows = []
    for k in ks:
        oracle_val = _oracle_value(g, k, args.oracle_budget)
        reports = bnd.all_bounds(g, s, k) + [bnd.best_bound(g, s, k)]
        for rep in reports:
            rows.append({
                "graph": g.name, "n": g.n, "k": k, "bound_name": rep.name,
                "raw": _real(rep.raw, args.format) if rep.applicable else "",
                "floored": rep.floored if rep.applicable else "",
                "applicable": "true" if rep.applicable else "false",
                "oracle": oracle_val,
            })
    cols = ["graph", "n", "k", "bound_name", "raw", "floored", "applicable", "oracle"]
    return render_rows(rows, cols, args.format), 0


def cmd_oracle(args) -> tuple[str, int]:
    g = resolve_graph(args)
    ks = parse_k_range(args.k)
    rows = []
    code = 0
    for k in ks:
        res = oracle.exact_alpha_k(g, k, args.oracle_budget)
        if not res.exact:
            code = 4
        rows.append({
            "graph": g.name, "n": g.n, "k": k,
            "alpha_k": res.alpha_k,
            "exact": "true" if res.exact else "false",
            "witness": " ".join(map(str, res.witness)),
            "nodes": res.nodes_explored,
            "diameter": oracle.exact_diameter(g),
        })
    cols = ["graph", "n", "k", "alpha_k", "exact", "witness", "nodes", "diameter"]
    return render_rows(rows, cols, args.format), code


def cmd_table1(args) -> tuple[str, int]:
    rows = []
    for name in TABLE1_NAMES:
        g = graphs.named(name)
        s = spectra.eigendecompose(g, args.tol)
        rep = bnd.quadratic_ratio_bound(g, s)
        rows.append({
            "graph": name, "n": g.n,
            "quadratic_raw": _real(rep.raw, args.format),
            "quadratic": rep.floored,
            "alpha_2": _oracle_value(g, 2, args.oracle_budget),
        })
    cols = ["graph", "n", "quadratic_raw", "quadratic", "alpha_2"]
    return render_rows(rows, cols, args.format), 0


def cmd_table2(args) -> tuple[str, int]:
    ks = [3, 4, 5, 6, 7]
    g = graphs.johnson(14, 7)
    s = spectra.eigendecompose(g, args.tol)
    delta = graphs.is_regular(g)
    fam = polynomials.predistance_family(s)
    diag = spectra.diag_powers(g, max(ks))

    def int_like(x: float) -> str:
        return str(int(round(x)))

    table: list[tuple[str, list[str]]] = []
    pk_vals = {}
    for k in ks:
        if k <= s.d - 1:
            pk_vals[k] = float(polynomials.alternating_polynomial(s, k)(s.theta0))
    table.append(("P_k(theta0)",
                  [int_like(pk_vals[k]) if k in pk_vals else "--" for k in ks]))
    table.append(("W_k (p=x+...+x^k)",
                  [str(int(diag[1 : k + 1].sum(axis=0).max())) for k in ks]))
    theta = max(abs(float(s.thetas[1])), abs(float(s.thetas[-1])))
    table.append(("theta", [int_like(theta)] * len(ks)))
    table.append(("lambda(p) (p=x+...+x^k)",
                  [int_like(float(np.min(polynomials.sum_power_poly(k)(s.thetas[1:]))))
                   for k in ks]))
    table.append(("q_k(delta)", [int_like(float(fam.q_values[k][0])) for k in ks]))
    table.append(("lambda(q_k)", [int_like(float(fam.q_values[k][1:].min())) for k in ks]))
    table.append(("bound alternating",
                  [int_like(pk_vals[k]) if k in pk_vals else "--" for k in ks]))
    table.append(("bound shifted_sum_power",
                  [str(bnd.shifted_sum_power_bound(g, s, k).floored) for k in ks]))
    table.append(("bound sum_power",
                  [str(bnd.sum_power_bound(g, s, k).floored) for k in ks]))
    table.append(("bound walk_regular",
                  [str(bnd.walk_regular_bound(g, s, k).floored) for k in ks]))

    rows = [{"row": label, **{str(k): v for k, v in zip(ks, vals)}}
            for label, vals in table]
    cols = ["row"] + [str(k) for k in ks]
    return render_rows(rows, cols, args.format), 0


# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    handlers = {
        "spectrum": cmd_spectrum,
        "bounds": cmd_bounds,
        "oracle": cmd_oracle,
        "table1": cmd_table1,
        "table2": cmd_table2,
    }
    try:
        output, code = handlers[args.command](args)
    except ConfigError as exc:
        print(f"kindep: {exc}", file=sys.stderr)
        return 2
    except KindepError as exc:
        print(f"kindep: computation failed: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(output)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
