"""Command-line interface: ``charvar compute | verify | table``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

from .genus1 import all_tables, verify_genus1
from .mirror import sl_repspace_epoly, verify_mirror
from .moduli import CLASSES, HolonomyClass, moduli_epoly, repspace_epoly, verify_moduli
from .recursion import matrix_M, verify_recursion
from .report import Report

FORMATS = ("text", "json", "csv", "latex")
LEVELS = ("moduli", "repspace", "sl-reconstructed")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_LATEX_CLASS = {
    HolonomyClass.Id: r"\mathrm{Id}",
    HolonomyClass.MinusId: r"-\mathrm{Id}",
    HolonomyClass.JPlus: "J_+",
    HolonomyClass.JMinus: "J_-",
    HolonomyClass.Parabolic: r"\xi_\lambda",
}


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def polynomial(g: int, space: HolonomyClass, level: str):
    if level == "moduli":
        return moduli_epoly(g, space)
    if level == "repspace":
        return repspace_epoly(g, space)
    return sl_repspace_epoly(g, space)


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"genus must be >= 1, got {n}")
    return n


def _matrix_entry(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected ROW,COL")
    if not (1 <= i <= 6 and 1 <= j <= 6):
        raise argparse.ArgumentTypeError("ROW and COL must be in 1..6")
    return i - 1, j - 1


def thread_count() -> int:
    raw = os.environ.get("CHARVAR_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parallel_map(fn: Callable, items: Sequence) -> list:
    workers = thread_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _latex_lhs(g: int, space: HolonomyClass, level: str) -> str:
    sub = _LATEX_CLASS[space]
    if level == "moduli":
        return rf"e(\mathcal{{M}}^{{{g}}}_{{{sub}}})"
    if level == "repspace":
        return rf"\tilde e^{{{g}}}_{{{sub}}}"
    return rf"e^{{{g}}}_{{{sub}}}\ (\text{{reconstructed}})"


def render_rows(rows: list[tuple[int, HolonomyClass, str, object]], fmt: str) -> str:
    if fmt == "json":
        return dump_json(
            [{"genus": g, "space": s.value, "level": lv, "coeffs": p.to_json()} for g, s, lv, p in rows]
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["genus", "space", "level", "polynomial"])
        for g, s, lv, p in rows:
            w.writerow([g, s.value, lv, str(p)])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = [rf"{_latex_lhs(g, s, lv)} &= {p.latex()}" for g, s, lv, p in rows]
        return "\\begin{align*}\n" + " \\\\\n".join(lines) + "\n\\end{align*}"
    width = max(len(s.value) for s in CLASSES)
    return "\n".join(f"g={g}  {s.value:<{width}}  {lv}  {p}" for g, s, lv, p in rows)


def render_report(report: Report, fmt: str) -> str:
    checks = list(report)
    if fmt == "json":
        return dump_json({"passed": report.passed, "checks": [c.to_json() for c in checks]})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "paper_anchor", "status", "detail"])
        for c in checks:
            w.writerow([c.name, c.anchor, c.status, c.detail])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        body = " \\\\\n".join(rf"\texttt{{{_tex_escape(c.name)}}} & {c.status}" for c in checks)
        return "\\begin{tabular}{ll}\n" + body + "\n\\end{tabular}"
    lines = []
    for c in checks:
        line = f"{c.status.upper():4}  {c.name}  [{c.anchor}]"
        if c.detail and not c.passed:
            line += f"\n      {c.detail}"
        lines.append(line)
    failed = len(report.failures)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)


def _tex_escape(s: str) -> str:
    for a, b in (("\\", r"\textbackslash{}"), ("_", r"\_"), ("^", r"\^{}"), ("{", r"\{"), ("}", r"\}"), ("&", r"\&")):
        s = s.replace(a, b)
    return s


def render_strata(fmt: str) -> str:
    tables = all_tables()
    if fmt == "json":
        return dump_json([t.to_json() for t in tables])
    lines = []
    for t in tables:
        lines.append(f"{t.space_label}  [{t.anchor}]")
        for s in t.entries:
            lines.append(f"  {'+' if s.sign > 0 else '-'} {s.label}: {s.value}  [{s.anchor}]")
        lines.append(f"  total: {t.total()}")
    return "\n".join(lines)


def run_verification(g_max: int, perturb: Optional[tuple[int, int]] = None) -> Report:
    M = None if perturb is None else matrix_M(perturb)
    report = Report()
    report.extend(verify_genus1())
    report.extend(verify_recursion(g_max, M=M, workers=thread_count()))
    report.extend(verify_moduli(g_max))
    report.extend(verify_mirror(g_max))
    return report


def cmd_compute(args) -> int:
    space = HolonomyClass(args.space)
    p = polynomial(args.genus, space, args.level)
    if args.format == "json":
        out = dump_json({"genus": args.genus, "space": space.value, "level": args.level, "coeffs": p.to_json()})
    elif args.format == "latex":
        out = p.latex()
    elif args.format == "csv":
        out = render_rows([(args.genus, space, args.level, p)], "csv")
    else:
        out = str(p)
    print(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(args.genus_max, args.perturb_m)
    print(render_report(report, args.format))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args) -> int:
    if args.strata:
        print(render_strata(args.format))
        return EXIT_OK
    keys = [(g, s) for g in range(1, args.genus_max + 1) for s in CLASSES]
    polys = _parallel_map(lambda k: polynomial(k[0], k[1], args.level), keys)
    print(render_rows([(g, s, args.level, p) for (g, s), p in zip(keys, polys)], args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="E-polynomials of PGL(2,C) character varieties of once-punctured surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print one polynomial")
    p.add_argument("--genus", type=_positive_int, required=True)
    p.add_argument("--space", choices=[c.value for c in CLASSES], required=True)
    p.add_argument("--level", choices=LEVELS, default="moduli")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check every identity up to a genus")
    p.add_argument("--genus-max", type=_positive_int, default=10)
    p.add_argument("--format", choices=FORMATS, default="text")
    # test hook: add 1 to one entry of M (1-based ROW,COL)
    p.add_argument("--perturb-m", type=_matrix_entry, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate polynomials for all classes")
    p.add_argument("--genus-max", "--genus", dest="genus_max", type=_positive_int, default=3)
    p.add_argument("--level", choices=LEVELS, default="moduli")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--strata", action="store_true", help="dump the genus-one strata tables instead")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
