"""Reproduction of the case tables and corpus-wide sweeps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from zknot import tables
from zknot.classify import FaceKind, classify_face
from zknot.generators import (
    BP,
    BP7_PAIR,
    BP5_PAIR,
    CorpusEntry,
    build,
    corpus_build,
    describe,
)
from zknot.generators import section7_recipe
from zknot.surgery import (
    GluingMap,
    normalize_words,
    predict_sum_zigzags,
    predict_z_knotted,
    theorem1_audit,
)
from zknot.zigzag import enumerate_zigzags

# fixed (recipe, face) instances per face class
TABLE_INSTANCES = {
    "od": [(BP(3), ("a", 1, 2)), (BP(7), ("a", 1, 2))],
    "ev": [(BP(5), ("a", 1, 2)), (BP(9), ("a", 1, 2))],
    "f1": [(BP7_PAIR, ("b", 1, 2)), (BP5_PAIR, ("b", 4, 5))],
    "f2": [(section7_recipe(3, 3), ("a", 2, 3))],
}


@dataclass
class InstanceCheck:
    left: str
    right: str
    words: list
    zigzags: int
    words_match: bool
    count_match: bool

    @property
    def ok(self) -> bool:
        return self.words_match and self.count_match


@dataclass
class RowCheck:
    row: tables.TableRow
    instances: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.instances) and all(i.ok for i in self.instances)


def gluing_for_row(row: tables.TableRow, labels1: tuple, labels2: tuple, face2: tuple, kind2_is_112: bool) -> GluingMap:
    names = [n + "'" for n in tables.LABEL_NAMES[kind2_is_112]]
    by_name = dict(zip(names, labels2))
    return GluingMap(tuple(labels1), tuple(face2), tuple(by_name[x] for x in row.images))


def check_row(row: tables.TableRow, instances: dict | None = None) -> RowCheck:
    instances = TABLE_INSTANCES if instances is None else instances
    out = RowCheck(row)
    k1, k2 = row.kinds
    for (r1, f1), (r2, f2) in itertools.product(instances[k1], instances[k2]):
        g1, g2 = build(r1), build(r2)
        zs1, zs2 = enumerate_zigzags(g1), enumerate_zigzags(g2)
        c1, c2 = classify_face(g1, zs1, f1), classify_face(g2, zs2, f2)
        if (c1.kind.short, c2.kind.short) != row.kinds:
            raise AssertionError(f"instance faces classify as {c1.kind}, {c2.kind}")
        face2 = g2.faces[g2.find_face(f2)]
        gmap = gluing_for_row(row, c1.labels, c2.labels, face2, c2.kind.is_112)
        pred = predict_sum_zigzags(g1, g2, gmap, c1.labels, c2.labels, zs1, zs2)
        direct = len(enumerate_zigzags(pred.sum.graph))
        words_match = row.words is None or normalize_words(pred.words) == normalize_words(row.words)
        out.instances.append(InstanceCheck(
            describe(r1), describe(r2), [str(w) for w in pred.words], direct,
            words_match, direct == row.zigzags == len(pred.words)))
    return out


def reproduce_tables(rows=None) -> list:
    rows = tables.TABLE_ROWS if rows is None else rows
    return [check_row(r) for r in rows]


@dataclass
class SweepResult:
    graphs: int
    kinds: set
    gluings: int = 0
    oracle_disagreements: list = field(default_factory=list)
    verdict_disagreements: list = field(default_factory=list)
    invalid: list = field(default_factory=list)
    # (kind, kind) -> [z-knotted count per face pair]
    counts: dict = field(default_factory=dict)


def representative_faces(entry: CorpusEntry) -> list:
    """One face of each class present, the least in face order."""
    reps = []
    for kind in FaceKind:
        fs = entry.faces_of(kind)
        if fs:
            reps.append(fs[0])
    return reps


def corpus_sweep(entries: list | None = None) -> SweepResult:
    """Audit all six gluings for every unordered pair of representative faces
    of z-knotted corpus graphs (self-pairs included)."""
    entries = corpus_build() if entries is None else entries
    zk = [e for e in entries if e.z_knotted and e.face_classes]
    reps = [(e, f) for e in zk for f in representative_faces(e)]
    res = SweepResult(len(zk), {e.face_classes[f].kind for e, f in reps})
    for i in range(len(reps)):
        for j in range(i, len(reps)):
            (e1, f1), (e2, f2) = reps[i], reps[j]
            audit = theorem1_audit(e1.graph, f1, e2.graph, f2, e1.zigzags, e2.zigzags)
            key = (e1.face_classes[f1].kind.short, e2.face_classes[f2].kind.short)
            tag = f"{e1.name}{list(f1)} + {e2.name}{list(f2)}"
            res.counts.setdefault(key, []).append(audit.z_knotted_count)
            for row in audit.rows:
                res.gluings += 1
                if not row.valid:
                    res.invalid.append((tag, row.gluing))
                    continue
                if not row.oracle_match:
                    res.oracle_disagreements.append((tag, row.gluing))
                if not (row.table_z_knotted == row.direct_z_knotted == row.composed_z_knotted):
                    res.verdict_disagreements.append((tag, row.gluing))
    return res
