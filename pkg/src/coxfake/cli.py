"""Command-line entry point: ``coxfake info|fakedeg|table|verify|dump``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .fakedeg import (
    InvalidSelector,
    catalog_types,
    fakedeg_bfs,
    resolve,
    table_row,
    verify_all,
)
from .qpoly import IntPoly, format_poly
from .rootsys import DEFAULT_BFS_BOUND, parse_type, root_system
from .table import expected_rows, orbit_description

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(spec: str, args):
    try:
        t = parse_type(spec, max_m=max(args.max_m, 60))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return t, root_system(t)


def _stab(types) -> str:
    return " x ".join(t.label for t in types) if types else "-"


def latex_poly(f: IntPoly) -> str:
    s = format_poly(f).replace("*", "")
    out = []
    for tok in s.split(" "):
        if "^" in tok:
            base, exp = tok.split("^")
            tok = f"{base}^{{{exp}}}"
        out.append(tok)
    return " ".join(out)


def latex_type(label: str) -> str:
    if label.startswith("I2("):
        return "I_2" + label[2:]
    if label == "-":
        return "-"
    return f"{label[0]}_{{{label[1:]}}}"


def latex_orbit(text: str) -> str:
    if text == "Phi":
        return "\\Phi"
    if text.startswith("{"):
        body = text[1:-1].replace("+-", "\\pm ").replace("  ", " ")
        return "\\{" + body + "\\}"
    return f"\\text{{{text}}}"


def latex_recipe(recipe: str) -> str:
    return recipe.replace("*", " ").replace("/", " / ")


def _emit_rows(rows: list, header: list, fmt: str, out) -> None:
    if fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        for r in [header] + rows:
            out.write("  ".join(str(x).ljust(wd) for x, wd in zip(r, widths)).rstrip() + "\n")


# ---------------------------------------------------------------- commands

def cmd_info(args, out) -> int:
    t, rs = _load(args.type, args)
    d = rs.datum
    info = {
        "type": d.label,
        "rank": d.rank,
        "h": d.h,
        "degrees": list(d.degrees),
        "exponents": list(d.exponents),
        "codegrees": list(d.codegrees),
        "order": d.order,
        "roots": len(rs.roots),
        "positive_roots": sum(rs.positive),
        "crystallographic": d.crystallographic,
        "orbits": [
            {"label": o.label, "size": len(o), "dominant": o.dominant,
             "stabilizer": list(o.stabilizer), "stabilizer_type": [x.label for x in o.stabilizer_type]}
            for o in rs.orbits
        ],
    }
    if args.format == "json":
        json.dump(info, out, indent=2)
        out.write("\n")
        return EXIT_OK
    if args.format in ("csv", "latex"):
        header = ["type", "rank", "h", "degrees", "roots", "orbits"]
        row = [d.label, d.rank, d.h, " ".join(map(str, d.degrees)), len(rs.roots),
               "; ".join(f"{o.label}:{len(o)}" for o in rs.orbits)]
        if args.format == "csv":
            _emit_rows([row], header, "csv", out)
        else:
            out.write(" & ".join(map(str, row)) + " \\\\\n")
        return EXIT_OK
    out.write(f"type       {d.label}\n")
    out.write(f"rank       {d.rank}\n")
    out.write(f"h          {d.h}\n")
    out.write(f"degrees    {' '.join(map(str, d.degrees))}\n")
    out.write(f"exponents  {' '.join(map(str, d.exponents))}\n")
    out.write(f"codegrees  {' '.join(map(str, d.codegrees))}\n")
    out.write(f"|W|        {d.order}\n")
    out.write(f"|Phi|      {len(rs.roots)} ({sum(rs.positive)} positive)\n")
    for o in rs.orbits:
        out.write(f"orbit      {o.label}: {len(o)} roots, stabilizer {_stab(o.stabilizer_type)}\n")
    return EXIT_OK


def cmd_fakedeg(args, out) -> int:
    t, rs = _load(args.type, args)
    try:
        resolve(rs, args.orbit)
    except InvalidSelector as exc:
        raise UsageError(str(exc)) from exc
    f = fakedeg_bfs(rs, args.orbit)
    row = table_row(rs, args.orbit)
    if args.format == "json":
        json.dump({
            "type": rs.label,
            "orbit": args.orbit,
            "h": rs.datum.h,
            "f": f.to_json(),
            "quotient": row["quotient"].to_json(),
            "gcd": row["gcd"].to_json(),
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        _emit_rows([[rs.label, args.orbit, format_poly(f), format_poly(row["quotient"]), format_poly(row["gcd"])]],
                   ["type", "orbit", "f", "quotient", "gcd"], "csv", out)
    elif args.format == "latex":
        out.write(f"f(q) &= {latex_poly(f)} \\\\\n")
        out.write(f"f(q)/[{rs.datum.h}]_q &= {latex_poly(row['quotient'])} \\\\\n")
        out.write(f"\\gcd &= {latex_poly(row['gcd'])}\n")
    else:
        out.write(f"f        = {format_poly(f)}\n")
        out.write(f"f/[{rs.datum.h}]_q = {format_poly(row['quotient'])}\n")
        out.write(f"gcd      = {format_poly(row['gcd'])}\n")
    return EXIT_OK


TABLE_HEADER = ["type", "h", "orbit", "stabilizer", "quotient", "gcd"]


def table_rows(max_rank: int, max_m: int) -> list:
    rows = []
    for t in catalog_types(max_rank, max_m):
        rs = root_system(t)
        exp = expected_rows(t)
        for i, o in enumerate(rs.orbits):
            r = table_row(rs, o.label)
            rows.append({
                "type": t.label,
                "h": rs.datum.h,
                "orbit": orbit_description(t, o.label) if len(rs.orbits) > 1 else "Phi",
                "stabilizer": _stab(o.stabilizer_type),
                "quotient": r["quotient"],
                "gcd": r["gcd"] if i == 0 else None,
                "recipe": exp[o.label]["quotient"],
                "gcd_recipe": exp["gcd"] if i == 0 else None,
            })
    return rows


def cmd_table(args, out) -> int:
    rows = table_rows(args.max_rank, args.max_m)
    if args.format == "latex":
        out.write("\\begin{tabular}{|c||c|c|c|c|c|c|}\n\\hline\n")
        out.write("$W$ & $h$ & $\\Phi'$ & $W_{\\alpha_0}$ type & $f^{\\Phi'}(q)/[h]_q$ "
                  "& expected & $\\gcd([h]_q, \\sum_i q^{d^*_i})$ \\\\ \\hline\\hline\n")
        for r in rows:
            stab = " \\times ".join(latex_type(x) for x in r["stabilizer"].split(" x "))
            gcd = f"${latex_poly(r['gcd'])}$" if r["gcd"] is not None else ""
            orbit = latex_orbit(r["orbit"])
            out.write(f"${latex_type(r['type'])}$ & ${r['h']}$ & ${orbit}$ & ${stab}$ & "
                      f"${latex_poly(r['quotient'])}$ & ${latex_recipe(r['recipe'])}$ & {gcd} \\\\ \\hline\n")
        out.write("\\end{tabular}\n")
        return EXIT_OK
    if args.format == "json":
        json.dump([
            {**{k: r[k] for k in ("type", "h", "orbit", "stabilizer", "recipe", "gcd_recipe")},
             "quotient": r["quotient"].to_json(),
             "gcd": r["gcd"].to_json() if r["gcd"] is not None else None}
            for r in rows
        ], out, indent=2)
        out.write("\n")
        return EXIT_OK
    flat = [[r["type"], r["h"], r["orbit"], r["stabilizer"], format_poly(r["quotient"]),
             format_poly(r["gcd"]) if r["gcd"] is not None else ""] for r in rows]
    _emit_rows(flat, TABLE_HEADER, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.all:
        types = catalog_types(args.max_rank, args.max_m)
    elif args.type:
        types = [_load(args.type, args)[0]]
    else:
        raise UsageError("give a type or --all")
    reports = [verify_all(t, bound=args.bfs_bound) for t in types]
    failures = sum(len(r.failures) for r in reports)
    fmt = args.format or "json"
    if fmt == "text":
        for r in reports:
            out.write(r.to_text() + "\n")
        out.write(f"{failures} failing claims\n")
    elif fmt == "json":
        payload = {
            "bounds": {"max_rank": args.max_rank, "max_m": args.max_m, "bfs_bound": args.bfs_bound},
            "failures": failures,
            "reports": [r.to_json() for r in reports],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        rows = [[r.type, c.id, c.status, c.ref] for r in reports for c in r.claims]
        _emit_rows(rows, ["type", "claim", "status", "ref"], "csv", out)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_dump(args, out) -> int:
    _, rs = _load(args.type, args)
    json.dump(rs.to_json(), out, indent=2)
    out.write("\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv", "latex"], default=None,
                        help="output format (default text; json for verify)")
    common.add_argument("--max-rank", type=int, default=12, help="largest rank for family rows (default 12)")
    common.add_argument("--max-m", type=int, default=30, help="largest m for I2(m) rows (default 30)")
    common.add_argument("--bfs-bound", type=int, default=DEFAULT_BFS_BOUND,
                        help="largest group enumerated as an oracle (default 1000000)")

    p = argparse.ArgumentParser(prog="coxfake", description="Fake degrees of reflection actions on roots.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("info", parents=[common], help="summary of a Coxeter type")
    s.add_argument("type")
    s = sub.add_parser("fakedeg", parents=[common], help="fake degree of a root orbit")
    s.add_argument("type")
    s.add_argument("--orbit", default="all", help="all, long or short (default all)")
    sub.add_parser("table", parents=[common], help="reproduce the root-orbit table")
    s = sub.add_parser("verify", parents=[common], help="run the verification suite")
    s.add_argument("type", nargs="?")
    s.add_argument("--all", action="store_true", help="every type within the bounds")
    s = sub.add_parser("dump", parents=[common], help="root system as JSON")
    s.add_argument("type")
    return p


COMMANDS = {"info": cmd_info, "fakedeg": cmd_fakedeg, "table": cmd_table, "verify": cmd_verify, "dump": cmd_dump}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    if args.command != "verify" and args.format is None:
        args.format = "text"
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"coxfake: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv=None) -> tuple:
    """Call main and capture stdout; returns (exit code, text)."""
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as exc:
        code = exc.code
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
