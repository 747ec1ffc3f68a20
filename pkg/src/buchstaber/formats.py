"""Text and JSON interchange: complex files, matrix files, witnesses, reports.

Complex text format, one statement per line ('#' starts a comment):

    m 4
    facet 1 2
    facet 2 3
    ...

or 'nonsimplex v1 v2 ...' lines (mutually exclusive with 'facet'). The JSON
form is {"m": int, "facets": [[...], ...]} or {"m": int, "nonsimplices":
[[...], ...]}. Matrix files carry one whitespace-separated row per line.
"""

from __future__ import annotations

import json
from typing import Sequence

from .complexes import SimplicialComplex, face_mask, face_vertices
from .invariant import InvariantReport, XiWitness


def parse_complex_text(text: str) -> SimplicialComplex:
    m = None
    facets: list[list[int]] = []
    nonsimp: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            values = [int(x) for x in parts[1:]]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer token") from exc
        if kind == "m":
            if m is not None:
                raise ValueError(f"line {lineno}: duplicate 'm' statement")
            if len(values) != 1:
                raise ValueError(f"line {lineno}: 'm' takes exactly one integer")
            m = values[0]
        elif kind == "facet":
            if m is None:
                raise ValueError(f"line {lineno}: 'facet' before 'm'")
            facets.append(values)
        elif kind == "nonsimplex":
            if m is None:
                raise ValueError(f"line {lineno}: 'nonsimplex' before 'm'")
            nonsimp.append(values)
        else:
            raise ValueError(f"line {lineno}: unknown statement {kind!r}")
    if m is None:
        raise ValueError("missing 'm' statement")
    if facets and nonsimp:
        raise ValueError("'facet' and 'nonsimplex' statements are mutually exclusive")
    if nonsimp:
        return SimplicialComplex.from_min_nonsimplices(m, nonsimp)
    return SimplicialComplex.from_facets(m, facets)


def complex_to_text(K: SimplicialComplex) -> str:
    lines = [f"m {K.m}"]
    for f in K.facets:
        verts = face_vertices(f)
        lines.append("facet " + " ".join(map(str, verts)) if verts else "facet")
    return "\n".join(lines) + "\n"


def parse_complex_json(text: str) -> SimplicialComplex:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "m" not in obj:
        raise ValueError("complex JSON must be an object with an 'm' field")
    m = obj["m"]
    if "facets" in obj and "nonsimplices" in obj:
        raise ValueError("'facets' and 'nonsimplices' are mutually exclusive")
    if "nonsimplices" in obj:
        return SimplicialComplex.from_min_nonsimplices(m, obj["nonsimplices"])
    return SimplicialComplex.from_facets(m, obj.get("facets", []))


def complex_to_json(K: SimplicialComplex) -> str:
    obj = {"m": K.m, "facets": [face_vertices(f) for f in K.facets]}
    return json.dumps(obj) + "\n"


def load_complex(path: str) -> SimplicialComplex:
    """Read a complex file, sniffing JSON vs text format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_complex_json(text)
    return parse_complex_text(text)


def parse_matrix_text(text: str) -> list[list[int]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer matrix entry") from exc
    if not rows:
        raise ValueError("matrix file has no rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix rows have unequal lengths")
    return rows


def matrix_to_text(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in rows) + "\n"


def gf2_rows_from_lists(rows: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Convert 0/1 row lists to bitmask rows plus the column count."""
    k = len(rows[0]) if rows else 0
    masks = []
    for row in rows:
        if any(x not in (0, 1) for x in row):
            raise ValueError("GF(2) matrix entries must be 0 or 1")
        masks.append(sum(bit << j for j, bit in enumerate(row)))
    return masks, k


def gf2_rows_to_lists(rows: Sequence[int], k: int) -> list[list[int]]:
    return [[(row >> j) & 1 for j in range(k)] for row in rows]


def xi_witness_to_dict(w: XiWitness, m: int) -> dict:
    """Wire form: vector bitmask (as a string key) -> non-face vertex list."""
    return {str(a): face_vertices(om) for a, om in sorted(w.assignment.items())}


def xi_witness_from_dict(obj: dict, m: int) -> XiWitness:
    assignment = {int(a): face_mask(verts, m) for a, verts in obj.items()}
    if not assignment:
        return XiWitness(0, {})
    k = max(assignment).bit_length()
    if sorted(assignment) != list(range(1, (1 << k))):
        raise ValueError("xi witness must assign every nonzero vector of Z_2^k")
    return XiWitness(k, assignment)


def report_to_dict(report: InvariantReport) -> dict:
    cw = report.criterion_witness
    xi = report.xi_witness
    k = xi.k if xi is not None else 0
    return {
        "m": report.m,
        "dim": report.dim,
        "num_min_nonsimplices": report.num_min_nonsimplices,
        "is_flag": report.is_flag,
        "ghost_vertices": list(report.ghost_vertices),
        "upper_bound": report.upper_bound,
        "criteria_level": report.criteria_level,
        "criterion_witness": None
        if cw is None
        else {
            "level": cw.level,
            "case": cw.case,
            "sets": [face_vertices(s) for s in cw.sets],
        },
        "cover": {
            "value": report.cover.value,
            "cover": [face_vertices(s) for s in report.cover.cover],
            "coverable": report.cover.coverable,
            "heuristic": report.cover.heuristic,
        },
        "graph_chromatic": report.graph_chromatic,
        "ayzenberg_value": report.ayzenberg_value,
        "chromatic_bound": report.chromatic_bound,
        "s_real": {
            "lower": report.s_real_lower,
            "upper": report.s_real_upper,
            "exact": report.s_real_exact,
            "value": report.s_real_value,
            "searched": report.s_real_searched,
        },
        "xi_witness": None if xi is None else xi_witness_to_dict(xi, report.m),
        "matrix_witness": None
        if report.matrix_rows is None
        else {
            "ring": "gf2",
            "k": k,
            "rows": gf2_rows_to_lists(report.matrix_rows, k),
        },
        "s": {
            "lower": report.s_lower,
            "upper": report.s_upper,
            "exact": report.s_exact,
            "value": report.s_value,
        },
        "warnings": list(report.warnings),
    }


def report_to_json(report: InvariantReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def report_to_text(report: InvariantReport) -> str:
    d = report_to_dict(report)
    lines = [
        f"m = {d['m']}",
        f"dim = {d['dim']}",
        f"|N(K)| = {d['num_min_nonsimplices']}",
        f"flag = {'yes' if d['is_flag'] else 'no'}",
    ]
    if d["ghost_vertices"]:
        lines.append("ghost vertices = " + " ".join(map(str, d["ghost_vertices"])))
    lines.append(f"upper bound m - dim - 1 = {d['upper_bound']}")
    cw = d["criterion_witness"]
    if cw is None:
        lines.append(f"criteria level = {d['criteria_level']}")
    else:
        sets = ", ".join("{" + ",".join(map(str, s)) + "}" for s in cw["sets"])
        lines.append(
            f"criteria level = {d['criteria_level']} (case {cw['case']}: {sets})"
        )
    cov = d["cover"]
    if cov["coverable"]:
        sets = ", ".join("{" + ",".join(map(str, s)) + "}" for s in cov["cover"])
        tag = " [greedy]" if cov["heuristic"] else ""
        lines.append(f"cover bound = {cov['value']} (cover: {sets}){tag}")
    else:
        lines.append("cover bound = 0 (vertices not coverable by non-faces)")
    if d["graph_chromatic"] is not None:
        lines.append(f"graph chromatic number = {d['graph_chromatic']}")
    if d["ayzenberg_value"] is not None:
        lines.append(f"graph formula value = {d['ayzenberg_value']}")
    if d["chromatic_bound"] is not None:
        lines.append(f"chromatic bound (polytopal) = {d['chromatic_bound']}")
    sr = d["s_real"]
    if sr["exact"]:
        lines.append(f"s_real(K) = {sr['lower']} (exact)")
    else:
        lines.append(f"s_real(K) in [{sr['lower']}, {sr['upper']}]")
    if d["xi_witness"] is not None:
        pieces = [
            f"{a} -> {{{','.join(map(str, verts))}}}"
            for a, verts in sorted(d["xi_witness"].items(), key=lambda kv: int(kv[0]))
        ]
        lines.append("xi witness: " + "; ".join(pieces))
    if d["matrix_witness"] is not None:
        rows = " ".join(
            "[" + " ".join(map(str, row)) + "]" for row in d["matrix_witness"]["rows"]
        )
        lines.append(f"matrix witness (gf2, k={d['matrix_witness']['k']}): {rows}")
    for w in d["warnings"]:
        lines.append(f"note: {w}")
    s = d["s"]
    if s["exact"]:
        lines.append(f"s(K) = {s['value']} (exact)")
    else:
        lines.append(f"s(K) in [{s['lower']}, {s['upper']}]")
    return "\n".join(lines) + "\n"
