"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line.  The lines are repeated in
pytest's terminal summary; executing this file directly prints them too.
"""

import contextlib
import io as stdio
import itertools

from zknot import cli, tables
from zknot.casebook import corpus_sweep, reproduce_tables
from zknot.classify import EdgeType, FaceKind, classify_face, classify_faces, edge_types, verify_duality
from zknot.embedding import are_isomorphic, edge_of
from zknot.generators import bipyramid, corpus_build, section7_sum, tetrahedron
from zknot.surgery import (
    GluingMap,
    SurgeryError,
    connected_sum,
    enumerate_identifications,
    normalize_words,
    predict_sum_zigzags,
)
from zknot.zigzag import enumerate_zigzags


# lines collected for the terminal summary (see conftest.py)
RESULTS = []


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def check_bipyramid_law():
    bad = []
    for n in (3, 5, 7, 9, 11, 13, 15):
        zs = enumerate_zigzags(bipyramid(n))
        if zs.z_vector != (6 * n,):
            bad.append(f"BP_{n} {zs.z_vector}")
    for n in (4, 6, 8, 10):
        zs = enumerate_zigzags(bipyramid(n))
        if len(zs) == 1 or (n in (6, 10) and len(zs) != 2):
            bad.append(f"BP_{n} has {len(zs)} zigzags")
    return not bad, "bipyramid z-vectors" + (f" wrong: {bad}" if bad else " as expected")


def check_face_class_law():
    bad = []
    for k in range(1, 8):
        want = FaceKind.ODD if k % 2 else FaceKind.EVEN
        kinds = {c.kind for c in classify_faces(bipyramid(2 * k + 1)).values()}
        if kinds != {want}:
            bad.append(f"BP_{2 * k + 1}: {kinds}")
    return not bad, "BP_{2k+1} faces odd for odd k, even for even k" + (f"; wrong {bad}" if bad else "")


def check_k4_sums():
    k4 = tetrahedron()
    found = 0
    for gmap in enumerate_identifications((1, 2, 3), (1, 2, 3)):
        s = connected_sum(k4, (1, 2, 3), k4, (1, 2, 3), gmap)
        found += are_isomorphic(s, bipyramid(3)) is not None
    return found == 6, f"{found}/6 sums K4#K4 isomorphic to BP_3"


def check_tables():
    checks = reproduce_tables()
    ok_rows = sum(c.ok for c in checks)
    buf = stdio.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(["tables"])
    last = buf.getvalue().splitlines()[-1]
    ok = ok_rows == len(checks) == 50 and code == 0 and last == "50/50 rows reproduced"
    return ok, f"{ok_rows}/{len(checks)} table rows reproduced ({last!r}, exit {code})"


def check_oracle(sweep):
    kinds = {k.short for k in sweep.kinds}
    ok = (sweep.graphs >= 12 and len(kinds) == 4 and not sweep.oracle_disagreements
          and not sweep.invalid)
    return ok, (f"{sweep.gluings} gluings over {sweep.graphs} z-knotted graphs, classes {sorted(kinds)}, "
                f"{len(sweep.oracle_disagreements)} oracle disagreements, {len(sweep.invalid)} invalid")


def check_class_pair_counts(sweep):
    want = {}
    for (k1, k2), counts in sweep.counts.items():
        pair = {k1, k2}
        if "f1" in pair:
            want[k1, k2] = 6
        elif pair == {"f2"}:
            want[k1, k2] = 0
        elif pair == {"f2", "ev"}:
            want[k1, k2] = 0
        elif pair == {"f2", "od"}:
            want[k1, k2] = 6
        if (k1, k2) in want and set(counts) != {want[k1, k2]}:
            return False, f"{k1}+{k2} z-knotted counts {sorted(set(counts))}, expected {want[k1, k2]}"
    covered = {frozenset(k) for k in want}
    needed = [{"f1", "od"}, {"f1", "ev"}, {"f1"}, {"f1", "f2"}, {"f2"}, {"f2", "ev"}, {"f2", "od"}]
    missing = [sorted(p) for p in needed if frozenset(p) not in covered]
    ok = not sweep.verdict_disagreements and not missing
    return ok, (f"{len(sweep.verdict_disagreements)} verdict disagreements; "
                f"class-pair counts hold on {len(want)} pairs" + (f"; missing {missing}" if missing else ""))


def check_bp6_construction():
    bad = []
    for k2 in (3, 5):
        g = section7_sum(3, k2)
        zs = enumerate_zigzags(g)
        if len(zs) != 1:
            bad.append(f"(3,{k2}) not z-knotted")
            continue
        if classify_face(g, zs, ("a", 2, 3)).kind is not FaceKind.SECOND:
            bad.append(f"(3,{k2}) face a,2,3 not second type")
        b1, b2 = bipyramid(6), bipyramid(2 * k2)
        gmap = GluingMap(("a", 1, 2), b2.faces[b2.find_face(("a", 1, 2))], (2, "a", 1))
        pred = predict_sum_zigzags(b1, b2, gmap, ("a", 1, 2), ("a", 1, 2))
        if normalize_words(pred.words) != normalize_words([tables.EVEN_BIPYRAMID_WORD]):
            bad.append(f"(3,{k2}) words {[str(w) for w in pred.words]}")
    return not bad, "section7_sum(3,3), (3,5): one zigzag, word " + tables.EVEN_BIPYRAMID_WORD + (
        f"; {bad}" if bad else ", face (a,2,3) second type")


def check_conservation(corpus):
    bad = []
    for e in corpus:
        g, zs = e.graph, e.zigzags
        if sum(zs.z_vector) != 2 * len(g.edges):
            bad.append(f"{e.name}: length sum")
        for z in zs:
            ws = {w for _, w in z.windows()}
            if ws & {w[::-1] for w in ws}:
                bad.append(f"{e.name}: self-reverse zigzag")
        if e.z_knotted and g.is_triangulation:
            t = edge_types(zs)
            for f in g.faces:
                k = sum(t[edge_of(f[i], f[(i + 1) % 3])] is EdgeType.SECOND for i in range(3))
                if k not in (1, 3):
                    bad.append(f"{e.name}: face {f} has {k} second-type edges")
        rep = verify_duality(g)
        if not rep.ok:
            bad.append(f"{e.name}: {rep.failures[:1]}")
    return not bad, f"{len(corpus)} corpus graphs: lengths, reversal, second-type counts, duality" + (
        f"; {bad[:3]}" if bad else " all hold")


def check_mixed_bipyramid_sums():
    g1, g2 = bipyramid(7), bipyramid(5)
    zs1, zs2 = enumerate_zigzags(g1), enumerate_zigzags(g2)
    sums = bad = 0
    for f1, f2 in itertools.product(g1.faces, g2.faces):
        for gmap in enumerate_identifications(f1, f2):
            try:
                pred = predict_sum_zigzags(g1, g2, gmap, zs1=zs1, zs2=zs2)
            except SurgeryError:
                continue
            zs = enumerate_zigzags(pred.sum.graph)
            if len(zs) != 1:
                continue
            sums += 1
            if any(not c.kind.is_112 for c in classify_faces(pred.sum.graph, zs).values()):
                bad += 1
    return sums > 0 and bad == 0, f"{sums} z-knotted sums BP_7#BP_5, {bad} with a (2,2,2) face"


# pytest entry points


def test_criterion_1_bipyramid_law():
    assert report(1, *check_bipyramid_law())


def test_criterion_2_face_class_law():
    assert report(2, *check_face_class_law())


def test_criterion_3_k4_sums_are_bp3():
    assert report(3, *check_k4_sums())


def test_criterion_4_tables():
    assert report(4, *check_tables())


def test_criterion_5_oracle_equivalence(sweep):
    assert report(5, *check_oracle(sweep))


def test_criterion_6_verdicts(sweep):
    assert report(6, *check_class_pair_counts(sweep))


def test_criterion_7_bp6_construction():
    assert report(7, *check_bp6_construction())


def test_criterion_8_conservation(corpus):
    assert report(8, *check_conservation(corpus))


def test_criterion_9_mixed_bipyramid_sums():
    assert report(9, *check_mixed_bipyramid_sums())


if __name__ == "__main__":
    corpus = corpus_build()
    sweep = corpus_sweep(corpus)
    results = [
        report(1, *check_bipyramid_law()),
        report(2, *check_face_class_law()),
        report(3, *check_k4_sums()),
        report(4, *check_tables()),
        report(5, *check_oracle(sweep)),
        report(6, *check_class_pair_counts(sweep)),
        report(7, *check_bp6_construction()),
        report(8, *check_conservation(corpus)),
        report(9, *check_mixed_bipyramid_sums()),
    ]
    raise SystemExit(0 if all(results) else 1)
