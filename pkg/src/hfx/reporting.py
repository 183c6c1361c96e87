"""Deterministic report rendering: JSON export, human text, TSV summary.

Scalars are always rendered as exact "num/den" strings ("num" when the
denominator is 1); every container is built in a fixed order, so equal
inputs produce byte-identical output across runs and processes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .audits import AuditReport, Witness
from .core import (AlgebraPresentation, BasisId, Element, TensorElement,
                   format_scalar)
from .vertex import ContractionReport


def _ids_sorted(alg, ids):
    return sorted(ids, key=alg.index)


def _element_json(e: Element, alg):
    keys = _ids_sorted(alg, e.coeffs)
    return [[str(k), format_scalar(e.coeffs[k])] for k in keys]


def _tensor_json(t: TensorElement, alg):
    keys = sorted(t.coeffs, key=lambda key: tuple(alg.index(b) for b in key))
    return [[[str(b) for b in key], format_scalar(t.coeffs[key])]
            for key in keys]


def _value_json(value, alg):
    if isinstance(value, Element):
        return {"kind": "element", "value": _element_json(value, alg)}
    if isinstance(value, TensorElement):
        return {"kind": f"tensor{value.arity}",
                "value": _tensor_json(value, alg)}
    return {"kind": "scalar", "value": format_scalar(Fraction(value))}


def _input_str(item):
    return str(item) if isinstance(item, BasisId) else str(item)


def _witness_json(w: Witness, alg):
    return {"inputs": [_input_str(i) for i in w.inputs],
            "lhs": _value_json(w.lhs, alg),
            "rhs": _value_json(w.rhs, alg)}


def _audits_json(report: AuditReport, alg):
    out = {}
    for check in report.checks:
        entry = {"status": check.status,
                 "checked": check.checked,
                 "skipped": check.skipped,
                 "witnesses": [_witness_json(w, alg) for w in check.witnesses]}
        if check.skipped_tuples:
            entry["skipped_tuples"] = [
                [_input_str(i) for i in t] for t in check.skipped_tuples]
        if check.note:
            entry["note"] = check.note
        out[check.axiom] = entry
    return out


def _contractions_json(report: ContractionReport):
    out = {}
    for check in report.checks:
        entry = {"title": check.title,
                 "status": check.status,
                 "values": [[list(v.index), format_scalar(v.lhs),
                             format_scalar(v.rhs)] for v in check.values]}
        if check.warnings:
            entry["warnings"] = list(check.warnings)
        if check.alt_status is not None:
            entry["alt_status"] = check.alt_status
            entry["alt_values"] = [[list(v.index), format_scalar(v.lhs),
                                    format_scalar(v.rhs)]
                                   for v in check.alt_values]
        if check.note:
            entry["note"] = check.note
        out[check.cond] = entry
    return out


def export_document(alg: AlgebraPresentation, audit: AuditReport | None = None,
                    contractions: ContractionReport | None = None) -> dict:
    """Machine-readable form of a presentation and its reports."""
    doc = {"basis": [str(b) for b in alg.basis]}
    mul_rows = []
    for x in alg.basis:
        for y in alg.basis:
            prod = alg.mul.get((x, y))
            if not prod:
                continue
            for z in _ids_sorted(alg, prod.coeffs):
                mul_rows.append([str(x), str(y), str(z),
                                 format_scalar(prod.coeffs[z])])
    doc["mul"] = mul_rows
    comul_rows = []
    for x in alg.basis:
        t = alg.comul.get(x)
        if not t:
            continue
        keys = sorted(t.coeffs, key=lambda key: tuple(alg.index(b) for b in key))
        for key in keys:
            comul_rows.append([str(x), [str(b) for b in key],
                               format_scalar(t.coeffs[key])])
    doc["comul"] = comul_rows
    doc["counit"] = [[str(b), format_scalar(alg.counit[b])]
                     for b in alg.basis if b in alg.counit]
    doc["unit"] = _element_json(alg.unit, alg)
    if alg.degree is not None:
        doc["degree"] = [[str(b), alg.degree[b]] for b in alg.basis]
        doc["degree_cap"] = alg.degree_cap
    doc["audits"] = _audits_json(audit, alg) if audit is not None else {}
    doc["contractions"] = (_contractions_json(contractions)
                           if contractions is not None else {})
    return doc


def render_export(alg, audit=None, contractions=None) -> str:
    return json.dumps(export_document(alg, audit, contractions),
                      indent=2, ensure_ascii=True) + "\n"


# -- human-readable forms -------------------------------------------------------

def _describe_value(value, alg):
    if isinstance(value, (Element, TensorElement)):
        return repr(value)
    return format_scalar(Fraction(value))


def render_text_report(alg, audit: AuditReport | None = None,
                       contractions: ContractionReport | None = None,
                       max_witnesses: int = 3) -> str:
    lines = [f"basis: {len(alg.basis)} elements"]
    if alg.degree is not None:
        dims = {}
        for b in alg.basis:
            dims[alg.degree[b]] = dims.get(alg.degree[b], 0) + 1
        per = " ".join(str(dims[d]) for d in sorted(dims))
        lines.append(f"degree dims: {per} (cap {alg.degree_cap})")
    if audit is not None:
        lines.append("audits:")
        for check in audit.checks:
            extra = ""
            if check.skipped:
                extra = f" ({check.skipped} tuples skipped)"
            lines.append(f"  {check.axiom:20s} {check.status}{extra}")
            if check.note:
                lines.append(f"      note: {check.note}")
            for w in check.witnesses[:max_witnesses]:
                ins = ", ".join(_input_str(i) for i in w.inputs)
                lines.append(f"      witness [{ins}]: "
                             f"{_describe_value(w.lhs, alg)}  !=  "
                             f"{_describe_value(w.rhs, alg)}")
    if contractions is not None:
        lines.append("contractions:")
        for check in contractions.checks:
            lines.append(f"  {check.cond:6s} {check.status}   ({check.title})")
            if check.alt_status is not None:
                lines.append(f"      alt normalization: {check.alt_status}")
            for v in check.failing()[:max_witnesses]:
                idx = ",".join(str(i) for i in v.index)
                lines.append(f"      ({idx}): {format_scalar(v.lhs)} != "
                             f"{format_scalar(v.rhs)}")
            for warning in check.warnings[:max_witnesses]:
                lines.append(f"      warning: {warning}")
    return "\n".join(lines) + "\n"


def summary_rows(audit: AuditReport | None = None,
                 contractions: ContractionReport | None = None):
    """(kind, id, status, detail) rows for the delimited summary."""
    rows = []
    if audit is not None:
        for check in audit.checks:
            detail = f"checked={check.checked} skipped={check.skipped} " \
                     f"witnesses={len(check.witnesses)}"
            rows.append(("audit", check.axiom, check.status, detail))
    if contractions is not None:
        for check in contractions.checks:
            detail = f"values={len(check.values)} " \
                     f"failing={len(check.failing())}"
            if check.alt_status is not None:
                detail += f" alt={check.alt_status}"
            rows.append(("contraction", check.cond, check.status, detail))
    return rows


def render_tsv(rows) -> str:
    lines = ["kind\tcheck\tstatus\tdetail"]
    lines.extend("\t".join(r) for r in rows)
    return "\n".join(lines) + "\n"
