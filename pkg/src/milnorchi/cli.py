"""Command-line front end: ``compute``, ``sweep`` and ``verify``.

Exit status: 0 on success, 1 on usage errors, and for ``verify`` the number
of failed checks (capped at 125).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import euler
from .groups import (
    GroupSpecError,
    classify,
    degree_profile,
    exceptionals,
    infinite_family,
    order_and_center,
    parse_group,
)
from .springer import hasse_edges, identify_centralizer, regular_data

EULER_KEYS = ("U_mod_G", "orbifold_F", "ordinary_quotient", "orbifold_quotient")


def build_report(g, m=None) -> dict:
    """Everything ``compute`` prints, as a JSON-ready dict (ints/strings only)."""
    info = classify(g)
    chi = euler.chi_character(g, m)
    report = {"group": str(g), "rank": info["rank"], "irreducible": info["irreducible"], "m": chi.m}
    if chi.reducible:
        report.update(
            note="reducible",
            coefficients=[],
            chi=chi.render(),
            euler={k: 0 for k in EULER_KEYS},
        )
        return report
    prof = degree_profile(g)
    data = regular_data(prof)
    oc = order_and_center(g)
    cents = []
    for d in sorted(data.D, reverse=True):
        cent = identify_centralizer(g, d)
        cents.append([d, str(cent.group) if cent.identified else None])
    report.update(
        degrees=list(prof.degrees),
        codegrees=list(prof.codegrees),
        order=oc["order"],
        center=oc["center"],
        regular_numbers=sorted(data.R),
        poset={"nodes": sorted(data.D), "edges": [list(e) for e in hasse_edges(data.D)]},
        coefficients=[[d, chi.coeffs[d]] for d in sorted(chi.coeffs, reverse=True)],
        chi=chi.render(),
        c=euler.c_classifier(g),
        centralizers=cents,
        euler={k: euler.quotient_euler(chi, k) for k in EULER_KEYS},
    )
    return report


def render_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _fmt(v):
    if isinstance(v, list):
        return " ".join(_fmt(x) for x in v) if v and isinstance(v[0], list) else ",".join(str(x) for x in v)
    if v is None:
        return "-"
    return str(v)


def render_text(report: dict) -> str:
    lines = [f"group: {report['group']}", f"rank: {report['rank']}"]
    if not report["irreducible"]:
        lines += [f"note: {report['note']}", f"m: {report['m']}", f"chi: {report['chi']}"]
        return "\n".join(lines) + "\n"
    for key in ("degrees", "codegrees", "order", "center", "m", "regular_numbers"):
        lines.append(f"{key}: {_fmt(report[key])}")
    lines.append(f"poset: {_fmt(report['poset']['nodes'])}")
    lines.append("hasse: " + " ".join(f"{a}<{b}" for a, b in report["poset"]["edges"]))
    lines.append("coefficients: " + " ".join(f"{d}:{a:+d}" for d, a in report["coefficients"]))
    lines.append("centralizers: " + " ".join(f"{d}:{_fmt(h)}" for d, h in report["centralizers"]))
    lines.append(f"chi: {report['chi']}")
    lines.append(f"c: {report['c']}")
    lines.append("euler: " + " ".join(f"{k}={report['euler'][k]}" for k in EULER_KEYS))
    return "\n".join(lines) + "\n"


def sweep_rows(kind, rmax=None, lmax=None) -> list:
    if kind == "exceptionals":
        rows = [{"group": "G3", "rank": 1, "c": 1, "chi": "Ir", "note": "G(r,1,1), r>=2"}]
        for g in exceptionals():
            rows.append(
                {"group": str(g), "rank": classify(g)["rank"], "c": euler.c_classifier(g),
                 "chi": euler.chi_character(g).render()}
            )
        return rows
    rows = []
    for g in infinite_family(rmax, lmax):
        rows.append(
            {"group": str(g), "rank": classify(g)["rank"], "c": euler.c_classifier(g),
             "chi": euler.chi_character(g).render()}
        )
    return rows


def sweep_text(rows) -> str:
    return "".join(f"{r['group']}\t{r['rank']}\t{r['c']}\t{r['chi']}\n" for r in rows)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def make_parser():
    parser = _Parser(prog="milnorchi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="invariants and chi for one group")
    p.add_argument("group", help="'G(r,p,l)' or 'Gn'")
    p.add_argument("--m", type=int, default=None, help="ambient cyclic order (default: discriminant degree)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sweep", help="chi for a whole family")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--exceptionals", action="store_true")
    which.add_argument("--family", nargs=2, type=int, metavar=("RMAX", "LMAX"))
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="brute-force oracle over G(r,p,l)")
    p.add_argument("--cap", type=int, default=20000, help="largest group order enumerated")
    p.add_argument("--family", nargs=2, type=int, metavar=("RMAX", "LMAX"), default=(12, 8))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--failures-only", action="store_true", help="only list failed checks")
    return parser


def _compute(args, out):
    try:
        g = parse_group(args.group)
    except GroupSpecError as exc:
        print(f"milnorchi: {exc}", file=sys.stderr)
        return 1
    try:
        report = build_report(g, args.m)
    except euler.AmbientOrderError as exc:
        print(f"milnorchi: invalid --m: {exc}", file=sys.stderr)
        return 1
    out.write(render_json(report) if args.format == "json" else render_text(report))
    return 0


def _sweep(args, out):
    if args.exceptionals:
        rows = sweep_rows("exceptionals")
    else:
        rows = sweep_rows("family", *args.family)
    out.write(render_json({"rows": rows}) if args.format == "json" else sweep_text(rows))
    return 0


def _verify(args, out):
    from .oracle.verify import oracle_groups, report_json, report_text, verify_group

    groups = oracle_groups(*args.family, cap=args.cap)
    if not groups:
        print("milnorchi: warning: no groups within cap", file=sys.stderr)
        out.write("no groups within cap\n")
        return 0
    checks = []
    for g in groups:
        checks.extend(verify_group(g.r, g.p, g.l, args.cap))
    if args.format == "json":
        out.write(report_json(checks))
    else:
        out.write(report_text(checks, args.failures_only))
    return min(sum(not c.passed for c in checks), 125)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    handler = {"compute": _compute, "sweep": _sweep, "verify": _verify}[args.command]
    return handler(args, out)


if __name__ == "__main__":
    sys.exit(main())
