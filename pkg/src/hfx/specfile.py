"""Line-oriented input format: trivially diffable, no nesting, exact integers.

Three modes:

    mode vertex                     mode graph            mode face
    [objects]                       maxdeg L              maxdeg L
    name dim                        [vertices]            [cells]
    [p]                             name                  name src dst deg dim
    unit NAME                       [edges]               [p]
    a b u count                     name src dst          a b u count
    [q] ... like [p]                                      [q] ...
    [sigma]   (optional)
    a sa

"#" starts a comment; blank lines are ignored. Rendering is canonical
(declaration order, table rows sorted by declared index order), so
parse(render(x)) == x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import IndexError_, ParseError, RangeError
from .face import DirectedGraph, OneCell, ProcategoryDimData
from .vertex import (AntipodeMap, DimCategory, HallFusionSpec,
                     PromonoidalDimData)

_NAME = re.compile(r"^[^\s;#\[\]]+$")

_SECTIONS = {
    "vertex": ("objects", "p", "q", "sigma"),
    "graph": ("vertices", "edges"),
    "face": ("cells", "p", "q"),
}


@dataclass(frozen=True)
class SpecFile:
    """Parsed payload of one input file."""

    mode: str
    vertex: HallFusionSpec | None = None
    procategory: ProcategoryDimData | None = None
    graph: DirectedGraph | None = None
    max_degree: int | None = None


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _name(token, lineno):
    if not _NAME.match(token):
        raise ParseError(f"invalid name {token!r}", lineno)
    return token


def _int(token, lineno, minimum, what):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer for {what}, got {token!r}",
                         lineno) from None
    if value < minimum:
        raise RangeError(f"{what} must be >= {minimum}, got {value}", lineno)
    return value


def parse_spec_file(text: str) -> SpecFile:
    """Parse one file; raises E_PARSE / E_RANGE / E_INDEX with line numbers."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input")
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "mode":
        raise ParseError("first line must be 'mode vertex|graph|face'", lineno)
    mode = parts[1]
    if mode not in _SECTIONS:
        raise ParseError(f"unknown mode {mode!r}", lineno)

    max_degree = None
    sections = {}
    current = None
    body = lines[1:]
    for lineno, line in body:
        if line.startswith("["):
            if not (line.startswith("[") and line.endswith("]")):
                raise ParseError("malformed section header", lineno)
            name = line[1:-1]
            if name not in _SECTIONS[mode]:
                raise ParseError(f"unknown section [{name}] in {mode} mode",
                                 lineno)
            if name in sections:
                raise ParseError(f"duplicate section [{name}]", lineno)
            current = name
            sections[name] = []
            continue
        tokens = line.split()
        if current is None:
            if tokens[0] == "maxdeg":
                if mode == "vertex":
                    raise ParseError("maxdeg is not used in vertex mode", lineno)
                if len(tokens) != 2 or max_degree is not None:
                    raise ParseError("malformed maxdeg line", lineno)
                max_degree = _int(tokens[1], lineno, 0, "maxdeg")
                continue
            raise ParseError(f"unexpected line outside any section: {line!r}",
                             lineno)
        sections[current].append((lineno, tokens))

    if mode in ("graph", "face") and max_degree is None:
        raise ParseError(f"{mode} mode requires a maxdeg line")
    if mode == "vertex":
        return SpecFile("vertex", vertex=_parse_vertex(sections))
    if mode == "graph":
        return SpecFile("graph", graph=_parse_graph(sections),
                        max_degree=max_degree)
    return SpecFile("face", procategory=_parse_face(sections),
                    max_degree=max_degree)


def _require(sections, name):
    if name not in sections:
        raise ParseError(f"missing section [{name}]")
    return sections[name]


def _parse_tensor(rows, declared, what):
    unit = None
    table = {}
    seen_unit = False
    for lineno, tokens in rows:
        if tokens[0] == "unit":
            if seen_unit or len(tokens) != 2:
                raise ParseError(f"malformed unit line in [{what}]", lineno)
            unit = _name(tokens[1], lineno)
            if unit not in declared:
                raise IndexError_(f"line {lineno}: undeclared unit {unit!r}")
            seen_unit = True
            continue
        if len(tokens) != 4:
            raise ParseError(f"expected 'a b u count' in [{what}]", lineno)
        a, b, u = (_name(t, lineno) for t in tokens[:3])
        for n in (a, b, u):
            if n not in declared:
                raise IndexError_(f"line {lineno}: undeclared name {n!r}")
        count = _int(tokens[3], lineno, 0, "count")
        key = (a, b, u)
        if key in table:
            raise ParseError(f"duplicate entry for [{a},{b},{u}]", lineno)
        if count:
            table[key] = count
    if not seen_unit:
        raise ParseError(f"section [{what}] lacks a unit line")
    return unit, table


def _parse_vertex(sections) -> HallFusionSpec:
    objects = []
    dims = {}
    for lineno, tokens in _require(sections, "objects"):
        if len(tokens) != 2:
            raise ParseError("expected 'name dim'", lineno)
        name = _name(tokens[0], lineno)
        if name in dims:
            raise ParseError(f"duplicate object {name!r}", lineno)
        dims[name] = _int(tokens[1], lineno, 1, "dim")
        objects.append(name)
    declared = set(objects)
    cat = DimCategory(tuple(objects), dims)
    p_unit, p_table = _parse_tensor(_require(sections, "p"), declared, "p")
    q_unit, q_table = _parse_tensor(_require(sections, "q"), declared, "q")
    sigma = None
    if "sigma" in sections:
        mapping = {}
        for lineno, tokens in sections["sigma"]:
            if len(tokens) != 2:
                raise ParseError("expected 'a sa' in [sigma]", lineno)
            a, sa = (_name(t, lineno) for t in tokens)
            for n in (a, sa):
                if n not in declared:
                    raise IndexError_(f"line {lineno}: undeclared name {n!r}")
            if a in mapping:
                raise ParseError(f"duplicate sigma entry for {a!r}", lineno)
            mapping[a] = sa
        missing = [a for a in objects if a not in mapping]
        if missing:
            raise ParseError(f"[sigma] lacks entries for {missing}")
        sigma = AntipodeMap(mapping)
    return HallFusionSpec(cat,
                          PromonoidalDimData(cat, p_table, p_unit),
                          PromonoidalDimData(cat, q_table, q_unit),
                          sigma)


def _parse_graph(sections) -> DirectedGraph:
    vertices = []
    for lineno, tokens in _require(sections, "vertices"):
        if len(tokens) != 1:
            raise ParseError("expected one vertex name per line", lineno)
        name = _name(tokens[0], lineno)
        if name in vertices:
            raise ParseError(f"duplicate vertex {name!r}", lineno)
        vertices.append(name)
    edges = []
    for lineno, tokens in _require(sections, "edges"):
        if len(tokens) != 3:
            raise ParseError("expected 'name src dst'", lineno)
        name, src, dst = (_name(t, lineno) for t in tokens)
        for v in (src, dst):
            if v not in vertices:
                raise IndexError_(f"line {lineno}: undeclared vertex {v!r}")
        edges.append((name, src, dst))
    return DirectedGraph(tuple(vertices), tuple(edges))


def _parse_face(sections) -> ProcategoryDimData:
    cells = []
    declared = set()
    zero_cells = []
    for lineno, tokens in _require(sections, "cells"):
        if len(tokens) != 5:
            raise ParseError("expected 'name src dst deg dim'", lineno)
        name, src, dst = (_name(t, lineno) for t in tokens[:3])
        deg = _int(tokens[3], lineno, 1, "deg")
        dim = _int(tokens[4], lineno, 1, "dim")
        if name in declared:
            raise ParseError(f"duplicate cell {name!r}", lineno)
        declared.add(name)
        for z in (src, dst):
            if z not in zero_cells:
                zero_cells.append(z)
        cells.append(OneCell(name, src, dst, deg, dim))
    _, p_table = _parse_tensor_face(_require(sections, "p"), declared, "p")
    _, q_table = _parse_tensor_face(_require(sections, "q"), declared, "q")
    return ProcategoryDimData(tuple(zero_cells), tuple(cells),
                              p_table, q_table)


def _parse_tensor_face(rows, declared, what):
    table = {}
    for lineno, tokens in rows:
        if len(tokens) != 4:
            raise ParseError(f"expected 'a b u count' in [{what}]", lineno)
        a, b, u = (_name(t, lineno) for t in tokens[:3])
        for n in (a, b, u):
            if n not in declared:
                raise IndexError_(f"line {lineno}: undeclared cell {n!r}")
        count = _int(tokens[3], lineno, 0, "count")
        key = (a, b, u)
        if key in table:
            raise ParseError(f"duplicate entry for [{a},{b},{u}]", lineno)
        if count:
            table[key] = count
    return None, table


# -- rendering -----------------------------------------------------------------

def _sorted_triples(table, order):
    pos = {name: i for i, name in enumerate(order)}
    return sorted(table.items(),
                  key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]], pos[kv[0][2]]))


def render_spec_file(sf: SpecFile) -> str:
    """Canonical text form; parse(render(x)) == x."""
    out = [f"mode {sf.mode}"]
    if sf.mode == "vertex":
        spec = sf.vertex
        cat = spec.category
        out.append("[objects]")
        out.extend(f"{a} {cat.dim(a)}" for a in cat.objects)
        for label, data in (("p", spec.p_data), ("q", spec.q_data)):
            out.append(f"[{label}]")
            out.append(f"unit {data.unit}")
            out.extend(f"{a} {b} {u} {v}" for (a, b, u), v
                       in _sorted_triples(data.table, cat.objects))
        if spec.sigma is not None:
            out.append("[sigma]")
            out.extend(f"{a} {spec.sigma.of(a)}" for a in cat.objects)
    elif sf.mode == "graph":
        out.append(f"maxdeg {sf.max_degree}")
        out.append("[vertices]")
        out.extend(sf.graph.vertices)
        out.append("[edges]")
        out.extend(f"{n} {s} {d}" for n, s, d in sf.graph.edges)
    else:
        pc = sf.procategory
        out.append(f"maxdeg {sf.max_degree}")
        out.append("[cells]")
        out.extend(f"{c.name} {c.src} {c.dst} {c.deg} {c.dim}" for c in pc.cells)
        order = [c.name for c in pc.cells]
        for label, table in (("p", pc.p_table), ("q", pc.q_table)):
            out.append(f"[{label}]")
            out.extend(f"{a} {b} {u} {v}" for (a, b, u), v
                       in _sorted_triples(table, order))
    return "\n".join(out) + "\n"


def spec_file_for_entry(entry) -> SpecFile:
    """Wrap a catalog entry as a SpecFile for rendering."""
    if entry.kind == "vertex":
        return SpecFile("vertex", vertex=entry.spec)
    return SpecFile("graph", graph=entry.graph, max_degree=entry.max_degree)
