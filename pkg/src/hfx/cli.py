"""Command-line front end.

Subcommands: validate, build, audit, table, export, catalog, report.
Exit codes: 0 when every requested check passes, 1 when at least one audit
fails, 2 on invalid input (reported on stderr with its E_* code).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .audits import DEFAULT_WITNESS_CAP
from .catalog import catalog_get, catalog_names
from .core import format_scalar
from .errors import HfxError, NameError_, ParseError
from .face import build_face_algebra, full_face_audit, graph_to_procategory
from .reporting import (render_export, render_text_report, render_tsv,
                        summary_rows)
from .specfile import (SpecFile, parse_spec_file, render_spec_file,
                       spec_file_for_entry)
from .vertex import build_hall_fusion, full_vertex_audit, validate_promonoidal


def _load(path: str) -> SpecFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_spec_file(text)


def _procategory(sf: SpecFile):
    if sf.mode == "graph":
        return graph_to_procategory(sf.graph, sf.max_degree)
    return sf.procategory


def _build(sf: SpecFile):
    if sf.mode == "vertex":
        return build_hall_fusion(sf.vertex)
    return build_face_algebra(_procategory(sf), sf.max_degree)


def _audit(sf: SpecFile, witness_cap: int):
    """(algebra, audit report, contraction report or None)"""
    if sf.mode == "vertex":
        return full_vertex_audit(sf.vertex, witness_cap)
    alg, report = full_face_audit(_procategory(sf), sf.max_degree, witness_cap)
    return alg, report, None


def _element_str(e, alg) -> str:
    if not e:
        return "0"
    parts = []
    for b in sorted(e.coeffs, key=alg.index):
        c = e.coeffs[b]
        parts.append(str(b) if c == 1 else f"{format_scalar(c)}*{b}")
    return " + ".join(parts)


def _tensor_str(t, alg) -> str:
    if not t:
        return "0"
    parts = []
    keys = sorted(t.coeffs, key=lambda key: tuple(alg.index(b) for b in key))
    for key in keys:
        c = t.coeffs[key]
        body = "(x)".join(str(b) for b in key)
        parts.append(body if c == 1 else f"{format_scalar(c)}*{body}")
    return " + ".join(parts)


def cmd_validate(args, out) -> int:
    sf = _load(args.file)
    if sf.mode == "vertex":
        report = (validate_promonoidal(sf.vertex.p_data, ".p")
                  .merged(validate_promonoidal(sf.vertex.q_data, ".q")))
        for check in report.checks:
            out.write(f"{check.cond}: {check.status}\n")
            for warning in check.warnings:
                out.write(f"  warning: {warning}\n")
        return 0 if report.all_pass() else 1
    pc = _procategory(sf)  # construction validates endpoints and degrees
    out.write(f"ok: {len(pc.zero_cells)} 0-cells, {len(pc.cells)} cells, "
              f"{len(pc.p_table)} + {len(pc.q_table)} table entries\n")
    return 0


def cmd_build(args, out) -> int:
    sf = _load(args.file)
    alg = _build(sf)
    out.write(f"basis: {len(alg.basis)} elements\n")
    if alg.degree is not None:
        dims = {}
        for b in alg.basis:
            dims[alg.degree[b]] = dims.get(alg.degree[b], 0) + 1
        per = " ".join(f"{d}:{dims[d]}" for d in sorted(dims))
        out.write(f"degree dims: {per} (cap {alg.degree_cap})\n")
    out.write(f"mul rows: {sum(len(e.coeffs) for e in alg.mul.values())}\n")
    return 0


def _select_axioms(report, spec_list):
    if not spec_list:
        return report
    wanted = [a.strip() for a in spec_list.split(",") if a.strip()]
    known = set(report.axioms())
    unknown = [a for a in wanted if a not in known]
    if unknown:
        raise NameError_(f"unknown axiom(s): {', '.join(unknown)}; "
                         f"available: {', '.join(report.axioms())}")
    return report.restrict(wanted)


def cmd_audit(args, out) -> int:
    sf = _load(args.file)
    alg, audit, contractions = _audit(sf, args.witness_cap)
    audit = _select_axioms(audit, args.axioms)
    if args.json:
        out.write(render_export(alg, audit, contractions))
    else:
        out.write(render_text_report(alg, audit, contractions))
    return 0 if audit.all_pass() else 1


def cmd_table(args, out) -> int:
    sf = _load(args.file)
    alg = _build(sf)
    if args.op == "mul":
        for x in alg.basis:
            for y in alg.basis:
                prod = alg.mul.get((x, y))
                if prod:
                    out.write(f"{x} * {y} = {_element_str(prod, alg)}\n")
    else:
        for x in alg.basis:
            t = alg.comul.get(x)
            if t:
                out.write(f"{x} -> {_tensor_str(t, alg)}\n")
    return 0


def cmd_export(args, out) -> int:
    sf = _load(args.file)
    alg, audit, contractions = _audit(sf, args.witness_cap)
    text = render_export(alg, audit, contractions)
    Path(args.output).write_text(text, encoding="utf-8")
    out.write(f"wrote {args.output}\n")
    return 0


def cmd_catalog(args, out) -> int:
    entry = catalog_get(args.name)
    text = render_spec_file(spec_file_for_entry(entry))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        out.write(f"wrote {args.output}\n")
    else:
        out.write(text)
    return 0


def cmd_report(args, out) -> int:
    from .figures import save_report_figures  # defers the matplotlib import
    sf = _load(args.file)
    alg, audit, contractions = _audit(sf, args.witness_cap)
    rows = summary_rows(audit, contractions)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tsv_path = outdir / "summary.tsv"
    tsv_path.write_text(render_tsv(rows), encoding="utf-8")
    written = [tsv_path]
    written += save_report_figures(outdir, alg, rows,
                                   title=Path(args.file).stem)
    for path in written:
        out.write(f"wrote {path}\n")
    return 0 if audit.all_pass() else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfx",
        description="Build and audit pair-basis fusion algebras and graded "
                    "face algebras from structure-constant data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate,
            "check unit/associativity shadows (vertex) or cell consistency")
    p.add_argument("file")
    p = add("build", cmd_build, "construct the algebra and print dimensions")
    p.add_argument("file")
    p = add("audit", cmd_audit, "run the full audit suite")
    p.add_argument("file")
    p.add_argument("--axioms", default="",
                   help="comma-separated subset of axioms to report")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output (byte-deterministic)")
    p.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    p = add("table", cmd_table, "print a structure-constant table")
    p.add_argument("file")
    p.add_argument("--op", choices=("mul", "comul"), required=True)
    p = add("export", cmd_export, "write the full JSON document")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    p = add("catalog", cmd_catalog,
            f"emit a built-in example ({', '.join(catalog_names())})")
    p.add_argument("name")
    p.add_argument("-o", "--output", default="")
    p = add("report", cmd_report,
            "write a TSV summary and figures for the audit results")
    p.add_argument("file")
    p.add_argument("--outdir", required=True)
    p.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    return parser


def run_command(argv, out=None, err=None) -> int:
    """Dispatch one invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.fn(args, out)
    except HfxError as exc:
        err.write(f"{exc.code}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
