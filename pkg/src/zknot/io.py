"""Plain-text graph files, DOT export and JSON reports.

Graph files are UTF-8 text, one face per line::

    # the tetrahedron
    f 1 2 3
    f 1 2 4
    f 1 3 4
    f 2 3 4

Tokens are any whitespace-free strings; decimal ones are read as integers.
"""

from __future__ import annotations

import json
from importlib import resources

from zknot.classify import EdgeType, edge_passes, edge_types
from zknot.embedding import EmbeddedGraph, euler_characteristic, sorted_vertices, validate_embedding
from zknot.zigzag import ZigzagSet, enumerate_zigzags, z_vector_string

SCHEMA_VERSION = "zknot.report/1"


class GraphSyntaxError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_token(tok: str):
    if tok.isdigit() and (tok == "0" or not tok.startswith("0")):
        return int(tok)
    return tok


def parse_graph(text: str) -> EmbeddedGraph:
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "f":
            raise GraphSyntaxError(lineno, f"expected 'f', got {parts[0]!r}")
        if len(parts) < 4:
            raise GraphSyntaxError(lineno, "a face needs at least 3 vertices")
        face = [parse_token(t) for t in parts[1:]]
        if len(set(face)) != len(face):
            raise GraphSyntaxError(lineno, "face repeats a vertex")
        faces.append(face)
    if not faces:
        raise GraphSyntaxError(0, "no faces")
    return EmbeddedGraph(faces)


def serialize_graph(g: EmbeddedGraph) -> str:
    return "".join("f " + " ".join(str(v) for v in face) + "\n" for face in g.faces)


def parse_face_ref(text: str) -> tuple:
    """``"1,2,a"`` -> ``(1, 2, "a")``."""
    return tuple(parse_token(t) for t in text.split(",") if t)


def face_ref(face) -> str:
    return ",".join(str(v) for v in sorted_vertices(face))


# ---------------------------------------------------------------------------
# DOT

_PALETTE = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"]


def _q(v) -> str:
    return '"' + str(v).replace('"', '\\"') + '"'


def edge_styles(g: EmbeddedGraph, zs: ZigzagSet) -> dict:
    """edge -> (style key, DOT attributes).  Edges are grouped by the zigzags
    passing them; an edge passed twice by one zigzag is drawn solid for first
    type and dashed for second type."""
    passes = edge_passes(zs)
    keys = {}
    for e, ps in passes.items():
        ids = tuple(sorted(p[0] for p in ps))
        if len(set(ids)) == 1:
            same = ps[0][2] == ps[1][2]
            keys[e] = (ids, EdgeType.SECOND if same else EdgeType.FIRST)
        else:
            keys[e] = (ids, None)
    colours = {}
    for k in sorted(set(keys.values()), key=lambda k: (k[0], k[1].value if k[1] else "")):
        colours[k] = _PALETTE[len(colours) % len(_PALETTE)]
    out = {}
    for e, k in keys.items():
        ids, etype = k
        style = "dashed" if etype is EdgeType.SECOND else "solid"
        label = etype.value if etype else "z" + "/z".join(str(i) for i in ids)
        out[e] = (k, f'color="{colours[k]}", style={style}, label="{label}"')
    return out


def export_dot(g: EmbeddedGraph, highlight: bool = True, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {_q(v)};")
    styles = edge_styles(g, enumerate_zigzags(g)) if highlight else {}
    for e in g.edges:
        attr = f" [{styles[e][1]}]" if e in styles else ""
        lines.append(f"  {_q(e[0])} -- {_q(e[1])}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reports


def load_schema() -> dict:
    return json.loads(resources.files("zknot").joinpath("report.schema.json").read_text())


def _jsonable(v):
    return v if isinstance(v, (int, str)) else str(v)


def graph_summary(g: EmbeddedGraph) -> dict:
    return {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "faces": len(g.faces),
        "euler_characteristic": euler_characteristic(g),
        "triangulation": g.is_triangulation,
    }


def validation_section(g: EmbeddedGraph) -> dict:
    rep = validate_embedding(g)
    return {
        "ok": rep.ok,
        "violations": [{"rule": v.rule, "elements": repr(v.elements)} for v in rep.violations],
    }


def zigzag_section(zs: ZigzagSet) -> dict:
    return {
        "z_vector": z_vector_string(zs),
        "z_knotted": len(zs) == 1,
        "zigzags": [[_jsonable(v) for v in z.sequence] for z in zs.zigzags],
    }


def classification_section(g: EmbeddedGraph, zs: ZigzagSet, classes: dict) -> dict:
    types = edge_types(zs)
    return {
        "edge_types": [{"edge": [_jsonable(e[0]), _jsonable(e[1])], "type": types[e].value} for e in g.edges],
        "face_classes": [
            {"face": [_jsonable(v) for v in f], "class": c.kind.value, "labels": [_jsonable(v) for v in c.labels]}
            for f, c in classes.items()
        ],
    }


def audit_section(report) -> dict:
    def cls(c):
        return None if c is None else {"class": c.kind.value, "labels": [_jsonable(v) for v in c.labels]}

    return {
        "face1": [_jsonable(v) for v in report.face1],
        "face2": [_jsonable(v) for v in report.face2],
        "class1": cls(report.class1),
        "class2": cls(report.class2),
        "z_knotted_count": report.z_knotted_count,
        "disagreements": len(report.disagreements),
        "rows": [
            {
                "gluing": r.gluing,
                "valid": r.valid,
                "table_z_knotted": r.table_z_knotted,
                "table_reason": r.table_reason,
                "composed_z_knotted": r.composed_z_knotted,
                "composed_words": r.composed_words,
                "direct_z_knotted": r.direct_z_knotted,
                "direct_zigzags": r.direct_zigzags,
                "oracle_match": r.oracle_match,
                "agree": r.agree,
            }
            for r in report.rows
        ],
    }


def tables_section(checks: list) -> list:
    return [
        {
            "table": c.row.source,
            "kinds": list(c.row.kinds),
            "images": list(c.row.images),
            "table_words": list(c.row.words) if c.row.words else None,
            "zigzags": c.row.zigzags,
            "ok": c.ok,
            "instances": [
                {"left": i.left, "right": i.right, "words": i.words, "zigzags": i.zigzags, "ok": i.ok}
                for i in c.instances
            ],
        }
        for c in checks
    ]


def make_report(**sections) -> dict:
    doc = {"schema": SCHEMA_VERSION}
    for key in ("graph", "validation", "zigzags", "classification", "audit", "tables", "sum"):
        if sections.get(key) is not None:
            doc[key] = sections[key]
    return doc


def dump_report(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
