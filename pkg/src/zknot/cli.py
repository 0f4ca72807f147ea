"""Command-line interface: ``zknot <command> ...``.

Graph arguments are file paths; ``-`` (the default) reads standard input, so
``zknot gen bipyramid 7 | zknot zigzags`` works.
"""

from __future__ import annotations

import argparse
import sys

from zknot import io
from zknot.casebook import reproduce_tables
from zknot.classify import classify_faces, edge_types
from zknot.embedding import EmbeddingError, validate_embedding
from zknot.generators import DEFAULT_RECIPES, bipyramid, build, cube, describe, section7_sum, tetrahedron
from zknot.surgery import GluingMap, SurgeryError, glue, theorem1_audit
from zknot.zigzag import enumerate_zigzags, z_vector_string

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return io.parse_graph(text)


def _face(g, ref: str) -> tuple:
    verts = io.parse_face_ref(ref)
    try:
        return g.faces[g.find_face(verts)]
    except KeyError:
        raise SystemExit(f"error: {ref} is not a face")


def _emit(args, doc: dict, text: str) -> None:
    sys.stdout.write(io.dump_report(doc) if args.json else text)


def cmd_validate(args) -> int:
    g = _read_graph(args.file)
    rep = validate_embedding(g)
    doc = io.make_report(graph=io.graph_summary(g), validation=io.validation_section(g))
    text = "ok\n" if rep.ok else "".join(f"violation {v}\n" for v in rep.violations)
    _emit(args, doc, text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_zigzags(args) -> int:
    g = _read_graph(args.file)
    zs = enumerate_zigzags(g)
    lines = [z_vector_string(zs)]
    lines += [f"{z.length}: " + " ".join(str(v) for v in z.sequence) for z in zs.zigzags]
    _emit(args, io.make_report(graph=io.graph_summary(g), zigzags=io.zigzag_section(zs)),
          "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _read_graph(args.file)
    zs = enumerate_zigzags(g)
    if len(zs) != 1:
        print(f"error: not z-knotted (z-vector {z_vector_string(zs)})", file=sys.stderr)
        return EXIT_FAIL
    types = edge_types(zs)
    classes = classify_faces(g, zs)
    lines = [f"edge {u} {v} {types[u, v].value}" for u, v in g.edges]
    lines += [f"face {io.face_ref(f)} {c.kind.value} labels {' '.join(map(str, c.labels))}"
              for f, c in classes.items()]
    doc = io.make_report(graph=io.graph_summary(g), zigzags=io.zigzag_section(zs),
                         classification=io.classification_section(g, zs, classes))
    _emit(args, doc, "\n".join(lines) + "\n")
    return EXIT_OK


def _parse_map(face1, face2, pairs) -> GluingMap:
    m = {}
    for p in pairs:
        if ":" not in p:
            raise SystemExit(f"error: bad --map entry {p!r}, expected v:w")
        a, b = p.split(":", 1)
        m[io.parse_token(a)] = io.parse_token(b)
    if set(m) != set(face1):
        raise SystemExit(f"error: --map must cover exactly {io.face_ref(face1)}")
    try:
        return GluingMap(face1, face2, tuple(m[v] for v in face1))
    except SurgeryError as exc:
        raise SystemExit(f"error: {exc}")


def cmd_sum(args) -> int:
    g1, g2 = _read_graph(args.file1), _read_graph(args.file2)
    f1, f2 = _face(g1, args.face1), _face(g2, args.face2)
    gmap = _parse_map(f1, f2, args.map)
    try:
        cs = glue(g1, g2, gmap)
    except SurgeryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    doc = io.make_report(graph=io.graph_summary(cs.graph),
                         sum={"gluing": str(gmap), "faces": [list(f) for f in cs.graph.faces]})
    _emit(args, doc, io.serialize_graph(cs.graph))
    return EXIT_OK


def cmd_audit(args) -> int:
    g1, g2 = _read_graph(args.file1), _read_graph(args.file2)
    f1, f2 = _face(g1, args.face1), _face(g2, args.face2)
    rep = theorem1_audit(g1, f1, g2, f2)
    lines = []
    for c, f in ((rep.class1, f1), (rep.class2, f2)):
        desc = f"{c.kind.value} labels {' '.join(map(str, c.labels))}" if c else "summand not z-knotted"
        lines.append(f"face {io.face_ref(f)}: {desc}")
    lines.append("gluing | table | composed | direct | oracle | words")
    for r in rep.rows:
        if not r.valid:
            lines.append(f"{r.gluing} | invalid sum")
            continue
        yn = lambda b: "-" if b is None else ("Z" if b else "n")  # noqa: E731
        lines.append(f"{r.gluing} | {yn(r.table_z_knotted)} | {yn(r.composed_z_knotted)} | "
                     f"{yn(r.direct_z_knotted)} ({r.direct_zigzags}) | "
                     f"{'ok' if r.oracle_match else 'MISMATCH'} | {' ; '.join(r.composed_words)}")
    lines.append(f"z-knotted gluings: {rep.z_knotted_count}/6, disagreements: {len(rep.disagreements)}")
    _emit(args, io.make_report(audit=io.audit_section(rep)), "\n".join(lines) + "\n")
    return EXIT_FAIL if rep.disagreements else EXIT_OK


def cmd_tables(args) -> int:
    checks = reproduce_tables()
    lines = []
    for c in checks:
        r = c.row
        status = "ok" if c.ok else "MISMATCH"
        lines.append(f"{'+'.join(r.kinds):5} {{{', '.join(r.images)}}} "
                     f"zigzags={r.zigzags} {' | '.join(r.words)} [{status}, {len(c.instances)} instances]")
    bad = sum(1 for c in checks if not c.ok)
    lines.append(f"{len(checks) - bad}/{len(checks)} rows reproduced")
    _emit(args, io.make_report(tables=io.tables_section(checks)), "\n".join(lines) + "\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_gen(args) -> int:
    name, rest = args.name, args.args
    try:
        if name == "tetrahedron":
            g = tetrahedron()
        elif name == "cube":
            g = cube()
        elif name == "bipyramid":
            g = bipyramid(int(rest[0]))
        elif name == "section7":
            g = section7_sum(int(rest[0]), int(rest[1]))
        elif name == "corpus":
            if not rest:
                for key, recipe in DEFAULT_RECIPES.items():
                    print(f"{key}\t{describe(recipe)}")
                return EXIT_OK
            g = build(DEFAULT_RECIPES[rest[0]])
        else:
            print(f"error: unknown generator {name!r}", file=sys.stderr)
            return EXIT_USAGE
    except (IndexError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(io.serialize_graph(g))
    return EXIT_OK


def cmd_dot(args) -> int:
    g = _read_graph(args.file)
    sys.stdout.write(io.export_dot(g, highlight=not args.plain))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zknot", description="Zigzags and connected sums of embedded graphs.")
    p.add_argument("--json", action="store_true", help="emit the JSON report instead of text")
    # --json is accepted on either side of the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    s = add("validate", "check the embedding conditions")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_validate)

    s = add("zigzags", "z-vector and canonical zigzags")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_zigzags)

    s = add("classify", "edge types and face classes of a z-knotted graph")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_classify)

    s = add("sum", "connected sum along two triangles")
    for a in ("file1", "face1", "file2", "face2"):
        s.add_argument(a)
    s.add_argument("--map", nargs=3, required=True, metavar="V:W")
    s.set_defaults(func=cmd_sum)

    s = add("audit", "check all six gluings against the case tables")
    for a in ("file1", "face1", "file2", "face2"):
        s.add_argument(a)
    s.set_defaults(func=cmd_audit)

    s = add("tables", "reproduce the case tables on bipyramid instances")
    s.set_defaults(func=cmd_tables)

    s = add("gen", "print a built-in graph")
    s.add_argument("name", help="tetrahedron | cube | bipyramid N | section7 K K2 | corpus [ENTRY]")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_gen)

    s = add("dot", "Graphviz output with zigzag edge styles")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--plain", action="store_true", help="no zigzag styling")
    s.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except io.GraphSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except EmbeddingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
