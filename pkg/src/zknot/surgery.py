"""Connected sums of triangulations and prediction of their zigzags.

Zigzags of a summand are cut at the three passages through the glued face
into segments.  Each segment begins with the second edge of a passage and
ends with the first edge of the next one, so in the sum a segment of one side
continues into the unique segment of the other side that starts on the image
of its last ordered pair.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from zknot import tables
from zknot.classify import FaceClass, FaceKind, classify_face, edge_types
from zknot.embedding import (
    EmbeddedGraph,
    EmbeddingError,
    ValidationReport,
    sorted_vertices,
    validate_embedding,
    vertex_key,
)
from zknot.zigzag import Zigzag, ZigzagSet, enumerate_zigzags


class SurgeryError(ValueError):
    def __init__(self, message, report: ValidationReport | None = None):
        super().__init__(message)
        self.report = report


class SegmentMatchError(RuntimeError):
    """Zero or several segments continue a given ordered pair."""


@dataclass(frozen=True)
class GluingMap:
    """Vertex bijection between two triangles; ``images[i]`` is the image of
    ``source_face[i]``."""

    source_face: tuple
    target_face: tuple
    images: tuple

    def __post_init__(self):
        if len(self.source_face) != 3 or len(self.target_face) != 3:
            raise SurgeryError("gluing maps are defined between triangles")
        if set(self.images) != set(self.target_face) or len(set(self.source_face)) != 3:
            raise SurgeryError(f"{self.images} is not a bijection onto {self.target_face}")

    def __call__(self, v):
        return self.images[self.source_face.index(v)]

    def as_dict(self) -> dict:
        return dict(zip(self.source_face, self.images))

    def inverse(self) -> "GluingMap":
        return GluingMap(self.images, self.source_face, self.source_face)

    def relabelled(self, source_order) -> "GluingMap":
        """The same map with the source face listed in ``source_order``."""
        source_order = tuple(source_order)
        return GluingMap(source_order, self.target_face, tuple(self(v) for v in source_order))

    def __str__(self):
        return " ".join(f"{u}:{v}" for u, v in zip(self.source_face, self.images))


def enumerate_identifications(face, other) -> list:
    face, other = tuple(face), tuple(other)
    if len(face) != 3 or len(other) != 3:
        raise SurgeryError("identifications are only enumerated for triangles")
    maps = [GluingMap(face, other, p) for p in itertools.permutations(other)]
    maps.sort(key=lambda m: [vertex_key(v) for v in m.images])
    return maps


def _primed_names(g1: EmbeddedGraph, g2: EmbeddedGraph, gmap: GluingMap) -> dict:
    """Names in the sum for the vertices of ``g2``: glued vertices take the
    name of their partner, the rest get primes until they are fresh."""
    back = gmap.inverse().as_dict()
    taken = set(g1.vertices)
    out = {}
    for v in sorted_vertices(g2.vertices):
        if v in back:
            out[v] = back[v]
            continue
        name = f"{v}'"
        while name in taken:
            name += "'"
        taken.add(name)
        out[v] = name
    return out


@dataclass(frozen=True)
class ConnectedSum:
    graph: EmbeddedGraph
    gluing: GluingMap
    right_names: dict  # vertex of the second summand -> its name in the sum


def glue(g1: EmbeddedGraph, g2: EmbeddedGraph, gmap: GluingMap, validate: bool = True) -> ConnectedSum:
    try:
        f1 = g1.find_face(gmap.source_face)
        f2 = g2.find_face(gmap.target_face)
    except KeyError as exc:
        raise SurgeryError(str(exc)) from None
    if len(g1.faces[f1]) != 3 or len(g2.faces[f2]) != 3:
        raise SurgeryError("connected sums are taken along triangles")
    names = _primed_names(g1, g2, gmap)
    faces = [f for i, f in enumerate(g1.faces) if i != f1]
    faces += [tuple(names[v] for v in f) for i, f in enumerate(g2.faces) if i != f2]
    graph = EmbeddedGraph(faces)
    if validate:
        report = validate_embedding(graph)
        if not report.ok:
            raise SurgeryError(f"glued graph is not a valid embedding:\n{report}", report)
    return ConnectedSum(graph, gmap, names)


def connected_sum(g1: EmbeddedGraph, face1, g2: EmbeddedGraph, face2, gmap) -> EmbeddedGraph:
    """Glue ``g1`` and ``g2`` along ``face1`` and ``face2``.

    ``gmap`` is a :class:`GluingMap` or the images of ``face1``'s vertices in
    the order given.  The result is validated before it is returned.
    """
    if not isinstance(gmap, GluingMap):
        gmap = GluingMap(tuple(face1), tuple(face2), tuple(gmap))
    if set(gmap.source_face) != set(face1) or set(gmap.target_face) != set(face2):
        raise SurgeryError("gluing map does not match the given faces")
    return glue(g1, g2, gmap).graph


# ---------------------------------------------------------------------------
# segments

SEGMENT_NAMES = "ABC"


@dataclass(frozen=True)
class Segment:
    name: str
    vertices: tuple
    zigzag: int

    @property
    def first_pair(self) -> tuple:
        return self.vertices[:2]

    @property
    def last_pair(self) -> tuple:
        return self.vertices[-2:]


@dataclass(frozen=True)
class SegmentDecomposition:
    graph: EmbeddedGraph
    face: tuple
    labels: tuple
    segments: tuple
    passages: tuple  # the window opening each segment, in segment order
    untouched: tuple  # zigzags that never pass through the face
    zigzags: ZigzagSet = field(repr=False, compare=False)

    def segment(self, name: str) -> Segment:
        for s in self.segments:
            if s.name == name:
                return s
        raise KeyError(name)


def _parity(window, labels) -> int:
    perm = [labels.index(v) for v in window]
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    return inversions % 2


def default_labels(g: EmbeddedGraph, face, zs: ZigzagSet | None = None) -> tuple:
    """Vertex roles for naming segments: the classified labels on a z-knotted
    triangulation, else the first passage of the first zigzag through it."""
    zs = zs if zs is not None else enumerate_zigzags(g)
    fi = g.find_face(face)
    if len(zs) == 1:
        return classify_face(g, zs, fi).labels
    return zs.passages_by_face()[fi][0][2]


def segment_decomposition(g: EmbeddedGraph, face, labels=None, zs: ZigzagSet | None = None) -> SegmentDecomposition:
    """Cut the zigzags of ``g`` at their passages through ``face``.

    The zigzag containing the window ``labels`` is read in that direction and
    supplies the first segments (A, B, ...) starting after that window.  Any
    other zigzag through the face is read so that its first passage is an odd
    permutation of ``labels``.
    """
    zs = zs if zs is not None else enumerate_zigzags(g)
    fi = g.find_face(face)
    tri = g.faces[fi]
    labels = tuple(labels) if labels is not None else default_labels(g, fi, zs)
    if set(labels) != set(tri):
        raise SurgeryError(f"labels {labels} do not match face {tri}")

    touched = {}
    for zi, pos, w in zs.passages_by_face()[fi]:
        touched.setdefault(zi, []).append(pos)
    untouched = tuple(z for zi, z in enumerate(zs.zigzags) if zi not in touched)

    start = None
    for zi in touched:
        z = zs.zigzags[zi]
        for pos in touched[zi]:
            w = z.window(pos)
            if w == labels:
                start = (zi, z, pos)
            elif w == labels[::-1]:
                rz = z.reversed()
                start = (zi, rz, (z.length - 1 - pos - 2) % z.length)
    if start is None:
        raise SurgeryError(f"{labels} is not a passage through {tri}")

    plan = [start]
    for zi in sorted(touched):
        if zi == start[0]:
            continue
        z = zs.zigzags[zi]
        first = min(touched[zi])
        if _parity(z.window(first), labels) != 1:
            z = z.reversed()
            first = min((z.length - 3 - p) % z.length for p in touched[zi])
        plan.append((zi, z, first))

    segments = []
    openings = []
    for zi, z, first in plan:
        n = z.length
        cuts = sorted(((p - first) % n for p, w in z.windows() if g.window_faces[w] == fi))
        if cuts[0] != 0:
            raise SurgeryError("passage bookkeeping is inconsistent")
        cuts.append(n)
        for a, b in zip(cuts, cuts[1:]):
            if len(segments) >= len(SEGMENT_NAMES):
                raise SurgeryError(f"more than three passages through {tri}")
            verts = tuple(z.sequence[(first + t) % n] for t in range(a + 1, b + 2))
            segments.append(Segment(SEGMENT_NAMES[len(segments)], verts, zi))
            openings.append(z.window(first + a))
    if len(segments) != 3:
        raise SurgeryError(f"{len(segments)} passages through {tri}, expected 3")
    return SegmentDecomposition(g, tri, labels, tuple(segments), tuple(openings), untouched, zs)


# ---------------------------------------------------------------------------
# segment words


@dataclass(frozen=True, order=True)
class Letter:
    side: int  # 0 for the first summand, 1 for the second
    name: str
    inverted: bool = False

    def __str__(self):
        return self.name + ("'" if self.side else "") + ("^-1" if self.inverted else "")

    def inverse(self) -> "Letter":
        return Letter(self.side, self.name, not self.inverted)

    @classmethod
    def parse(cls, text: str) -> "Letter":
        text = text.strip()
        inverted = text.endswith("^-1")
        if inverted:
            text = text[:-3]
        side = 1 if text.endswith("'") else 0
        return cls(side, text.rstrip("'"), inverted)


@dataclass(frozen=True)
class SegmentWord:
    letters: tuple

    def __str__(self):
        return ", ".join(str(x) for x in self.letters)

    def __len__(self):
        return len(self.letters)

    @classmethod
    def parse(cls, text: str) -> "SegmentWord":
        return cls(tuple(Letter.parse(t) for t in text.split(",")))

    def reversed(self) -> "SegmentWord":
        return SegmentWord(tuple(x.inverse() for x in reversed(self.letters)))

    def normalized(self) -> tuple:
        """Least rotation of the word or of its reversal."""
        best = None
        for w in (self.letters, self.reversed().letters):
            for i in range(len(w)):
                cand = w[i:] + w[:i]
                if best is None or cand < best:
                    best = cand
        return best


def normalize_words(words) -> tuple:
    """Order-free, rotation- and reversal-free form of a set of words."""
    out = []
    for w in words:
        if isinstance(w, str):
            w = SegmentWord.parse(w)
        out.append(w.normalized())
    return tuple(sorted(out))


def _oriented(seg: Segment, inverted: bool) -> tuple:
    return seg.vertices[::-1] if inverted else seg.vertices


def compose_zigzags(dec1: SegmentDecomposition, dec2: SegmentDecomposition, gmap: GluingMap) -> list:
    """Chain segments across the glued face into closed words."""
    fwd = gmap.as_dict()
    back = gmap.inverse().as_dict()
    decs = (dec1, dec2)
    starts = ({}, {})
    for side, dec in enumerate(decs):
        for seg in dec.segments:
            for inv in (False, True):
                pair = _oriented(seg, inv)[:2]
                starts[side].setdefault(pair, []).append(Letter(side, seg.name, inv))

    def last_pair(letter):
        return _oriented(decs[letter.side].segment(letter.name), letter.inverted)[-2:]

    used = set()
    words = []
    for seg in dec1.segments:
        if (0, seg.name) in used:
            continue
        first = Letter(0, seg.name)
        used.add((0, seg.name))
        letters = [first]
        cur = first
        while True:
            a, b = last_pair(cur)
            m = fwd if cur.side == 0 else back
            target = (m[a], m[b])
            cands = starts[1 - cur.side].get(target, [])
            if len(cands) != 1:
                raise SegmentMatchError(f"{len(cands)} segments continue {str(cur)} at {target}")
            (nxt,) = cands
            if nxt == first:
                break
            if (nxt.side, nxt.name) in used:
                raise SegmentMatchError(f"segment {nxt} reused")
            used.add((nxt.side, nxt.name))
            letters.append(nxt)
            cur = nxt
        words.append(SegmentWord(tuple(letters)))
    if len(used) != 6:
        raise SegmentMatchError("not every segment was used")
    return words


def expand_segment_word(word: SegmentWord, dec1: SegmentDecomposition, dec2: SegmentDecomposition,
                        right_names: dict) -> Zigzag:
    """Concatenate the segments of ``word`` in the vertex names of the sum;
    consecutive segments overlap in exactly two vertices."""
    pieces = []
    for x in word.letters:
        verts = _oriented((dec1, dec2)[x.side].segment(x.name), x.inverted)
        if x.side == 1:
            verts = tuple(right_names[v] for v in verts)
        pieces.append(verts)
    out = list(pieces[0])
    for p in pieces[1:]:
        if tuple(out[-2:]) != p[:2]:
            raise SegmentMatchError(f"junction mismatch {out[-2:]} vs {p[:2]} in {word}")
        out.extend(p[2:])
    if tuple(out[-2:]) != pieces[0][:2]:
        raise SegmentMatchError(f"word {word} does not close")
    return Zigzag(tuple(out[:-2]))


@dataclass
class SumPrediction:
    gluing: GluingMap
    decompositions: tuple
    words: list
    zigzags: list  # expanded words followed by carried-over zigzags, sum names
    sum: ConnectedSum | None = None

    @property
    def canonical(self) -> Counter:
        return Counter(z.canonical_key for z in self.zigzags)

    def shape(self) -> tuple:
        return tuple(sorted(len(w) for w in self.words))


def predict_sum_zigzags(g1: EmbeddedGraph, g2: EmbeddedGraph, gmap: GluingMap,
                        labels1=None, labels2=None, zs1=None, zs2=None,
                        validate: bool = True) -> SumPrediction:
    zs1 = zs1 if zs1 is not None else enumerate_zigzags(g1)
    zs2 = zs2 if zs2 is not None else enumerate_zigzags(g2)
    dec1 = segment_decomposition(g1, gmap.source_face, labels1, zs1)
    dec2 = segment_decomposition(g2, gmap.target_face, labels2, zs2)
    cs = glue(g1, g2, gmap, validate=validate)
    words = compose_zigzags(dec1, dec2, gmap)
    zigzags = [expand_segment_word(w, dec1, dec2, cs.right_names) for w in words]
    zigzags += list(dec1.untouched)
    zigzags += [Zigzag(tuple(cs.right_names[v] for v in z.sequence)) for z in dec2.untouched]
    return SumPrediction(gmap, (dec1, dec2), words, zigzags, cs)


# ---------------------------------------------------------------------------
# table-driven verdicts


@dataclass(frozen=True)
class Theorem1Verdict:
    z_knotted: bool
    zigzags: int
    source: str
    kinds: tuple
    images: tuple
    words: tuple | None
    swapped: bool = False

    @property
    def reason(self) -> str:
        how = " (summands swapped)" if self.swapped else ""
        return f"{self.source} {'+'.join(self.kinds)} row {{{', '.join(self.images)}}}{how}"


def _row_images(src: FaceClass, dst: FaceClass, mapping: dict) -> tuple:
    names = tables.LABEL_NAMES[dst.kind.is_112]
    by_vertex = {v: n + "'" for v, n in zip(dst.labels, names)}
    return tuple(by_vertex[mapping[v]] for v in src.labels)


def predict_z_knotted(c1: FaceClass, c2: FaceClass, gmap: GluingMap) -> Theorem1Verdict:
    """Look the gluing up in the case tables (swapping summands if needed)."""
    for cls in (c1, c2):
        if not isinstance(cls, FaceClass) or len(cls.labels) != 3:
            raise SurgeryError("face classes must carry labelled vertices")
    kinds = (c1.kind.short, c2.kind.short)
    if kinds in tables.KIND_PAIRS:
        images = _row_images(c1, c2, gmap.as_dict())
        row, swapped = tables.LOOKUP[kinds, images], False
    else:
        images = _row_images(c2, c1, gmap.inverse().as_dict())
        row, swapped = tables.LOOKUP[kinds[::-1], images], True
    return Theorem1Verdict(row.z_knotted, row.zigzags, row.source, row.kinds, row.images,
                           row.words, swapped)


# ---------------------------------------------------------------------------
# audit


@dataclass
class AuditRow:
    gluing: str
    images: tuple
    valid: bool
    table_z_knotted: bool | None = None
    table_reason: str | None = None
    composed_z_knotted: bool | None = None
    composed_words: list = field(default_factory=list)
    direct_z_knotted: bool | None = None
    direct_zigzags: int | None = None
    oracle_match: bool | None = None

    @property
    def agree(self) -> bool:
        if not self.valid:
            return True
        vals = {self.composed_z_knotted, self.direct_z_knotted}
        if self.table_z_knotted is not None:
            vals.add(self.table_z_knotted)
        return len(vals) == 1 and bool(self.oracle_match)


@dataclass
class AuditReport:
    face1: tuple
    face2: tuple
    class1: FaceClass | None
    class2: FaceClass | None
    rows: list

    @property
    def disagreements(self) -> list:
        return [r for r in self.rows if not r.agree]

    @property
    def z_knotted_count(self) -> int:
        return sum(1 for r in self.rows if r.valid and r.direct_z_knotted)


def theorem1_audit(g1: EmbeddedGraph, face1, g2: EmbeddedGraph, face2,
                   zs1: ZigzagSet | None = None, zs2: ZigzagSet | None = None) -> AuditReport:
    """Compare table verdict, segment composition and direct enumeration for
    all six gluings of ``face1`` onto ``face2``."""
    zs1 = zs1 if zs1 is not None else enumerate_zigzags(g1)
    zs2 = zs2 if zs2 is not None else enumerate_zigzags(g2)
    f1 = g1.faces[g1.find_face(face1)]
    f2 = g2.faces[g2.find_face(face2)]
    c1 = classify_face(g1, zs1, f1) if len(zs1) == 1 else None
    c2 = classify_face(g2, zs2, f2) if len(zs2) == 1 else None
    l1 = c1.labels if c1 else None
    l2 = c2.labels if c2 else None
    rows = []
    for gmap in enumerate_identifications(l1 or f1, f2):
        row = AuditRow(str(gmap), gmap.images, valid=True)
        try:
            pred = predict_sum_zigzags(g1, g2, gmap, l1, l2, zs1, zs2)
        except SurgeryError:
            row.valid = False
            rows.append(row)
            continue
        if c1 and c2:
            verdict = predict_z_knotted(c1, c2, gmap)
            row.table_z_knotted = verdict.z_knotted
            row.table_reason = verdict.reason
        row.composed_words = [str(w) for w in pred.words]
        row.composed_z_knotted = len(pred.zigzags) == 1
        direct = enumerate_zigzags(pred.sum.graph)
        row.direct_zigzags = len(direct)
        row.direct_z_knotted = len(direct) == 1
        row.oracle_match = direct.canonical_keys() == pred.canonical
        rows.append(row)
    return AuditReport(f1, f2, c1, c2, rows)
