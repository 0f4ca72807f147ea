"""Edge types and face classes of z-knotted graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from zknot.embedding import EmbeddedGraph, dual_graph, edge_of, vertex_key
from zknot.zigzag import ZigzagSet, enumerate_zigzags, z_vector_string


class NotZKnottedError(ValueError):
    pass


class ClassificationError(RuntimeError):
    """A face violates the one-or-three second-type edges law."""


class EdgeType(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class FaceKind(enum.Enum):
    ODD = "(1,1,2)-odd"
    EVEN = "(1,1,2)-even"
    FIRST = "(2,2,2)-first"
    SECOND = "(2,2,2)-second"

    @property
    def short(self) -> str:
        return {"(1,1,2)-odd": "od", "(1,1,2)-even": "ev",
                "(2,2,2)-first": "f1", "(2,2,2)-second": "f2"}[self.value]

    @property
    def is_112(self) -> bool:
        return self in (FaceKind.ODD, FaceKind.EVEN)


@dataclass(frozen=True)
class FaceClass:
    """Class of a triangular face plus the vertex roles used to name segments.

    For (1,1,2) faces ``labels`` is ``(apex, y, z)`` with the zigzag running
    twice from ``y`` to ``z``.  For (2,2,2) faces it is the face read along
    the orientation the zigzag induces, starting at its least vertex.
    """

    kind: FaceKind
    labels: tuple


@dataclass(frozen=True)
class Passage:
    zigzag: int
    position: int
    window: tuple


def is_z_knotted(g: EmbeddedGraph, zs: ZigzagSet | None = None) -> bool:
    zs = zs if zs is not None else enumerate_zigzags(g)
    return len(zs) == 1


def edge_passes(zs: ZigzagSet) -> dict:
    """edge -> the directed passes ``(zigzag, position, (u, v))`` over it."""
    out = {e: [] for e in zs.graph.edges}
    for zi, z in enumerate(zs.zigzags):
        for pos, (u, v) in enumerate(z.traversals):
            out[edge_of(u, v)].append((zi, pos, (u, v)))
    return out


def edge_types(zs: ZigzagSet) -> dict:
    if len(zs) != 1:
        raise NotZKnottedError(f"edge types need a unique zigzag, found {len(zs)}")
    out = {}
    for e, passes in edge_passes(zs).items():
        if len(passes) != 2:
            raise ClassificationError(f"edge {e} passed {len(passes)} times")
        d1, d2 = passes[0][2], passes[1][2]
        out[e] = EdgeType.SECOND if d1 == d2 else EdgeType.FIRST
    return out


def edge_type(g: EmbeddedGraph, zs: ZigzagSet | None, e) -> EdgeType:
    zs = zs if zs is not None else enumerate_zigzags(g)
    return edge_types(zs)[edge_of(*e)]


def face_passages(zs: ZigzagSet, face) -> list:
    """Windows of the zigzags lying on ``face``, in zigzag order."""
    g = zs.graph
    fi = face if isinstance(face, int) else g.find_face(face)
    return [Passage(*p) for p in zs.passages_by_face()[fi]]


def _cyclic_order(passages: list, n: int, start: Passage) -> list:
    return sorted(passages, key=lambda p: (p.position - start.position) % n)


def classify_face(g: EmbeddedGraph, zs: ZigzagSet | None, face, types: dict | None = None) -> FaceClass:
    zs = zs if zs is not None else enumerate_zigzags(g)
    types = types if types is not None else edge_types(zs)
    fi = face if isinstance(face, int) else g.find_face(face)
    tri = g.faces[fi]
    if len(tri) != 3:
        raise ClassificationError(f"face {tri} is not a triangle")
    n = zs.zigzags[0].length
    passages = face_passages(zs, fi)
    if len(passages) != 3:
        raise ClassificationError(f"face {tri} has {len(passages)} passages")
    windows = {p.window: p for p in passages}
    second = [e for e in (edge_of(tri[i], tri[(i + 1) % 3]) for i in range(3))
              if types[e] is EdgeType.SECOND]

    if len(second) == 1:
        u, v = second[0]
        (x,) = set(tri) - {u, v}
        dirs = {d for _, _, d in edge_passes(zs)[second[0]]}
        (y, z), = dirs
        try:
            p1, p2, p3 = windows[x, y, z], windows[y, z, x], windows[y, x, z]
        except KeyError:
            raise ClassificationError(f"unexpected passages {sorted(windows)} on {tri}") from None
        order = _cyclic_order([p1, p2, p3], n, p1)
        kind = FaceKind.ODD if order[1] is p3 else FaceKind.EVEN
        return FaceClass(kind, (x, y, z))

    if len(second) == 3:
        # the three second-type edges must run around the face one way
        heads = {}
        for e in second:
            (d,) = {d for _, _, d in edge_passes(zs)[e]}
            heads[d[0]] = d[1]
        if len(heads) != 3:
            raise ClassificationError(f"second-type edges of {tri} are not cyclically oriented")
        x = min(tri, key=vertex_key)
        y = heads[x]
        z = heads[y]
        try:
            w0, w1, w2 = windows[x, y, z], windows[z, x, y], windows[y, z, x]
        except KeyError:
            raise ClassificationError(f"unexpected passages {sorted(windows)} on {tri}") from None
        order = _cyclic_order([w0, w1, w2], n, w0)
        kind = FaceKind.FIRST if order[1] is w1 else FaceKind.SECOND
        return FaceClass(kind, (x, y, z))

    raise ClassificationError(f"face {tri} has {len(second)} second-type edges")


def classify_faces(g: EmbeddedGraph, zs: ZigzagSet | None = None) -> dict:
    """face tuple -> FaceClass for every face of a z-knotted triangulation."""
    zs = zs if zs is not None else enumerate_zigzags(g)
    types = edge_types(zs)
    return {face: classify_face(g, zs, i, types) for i, face in enumerate(g.faces)}


@dataclass
class DualityReport:
    z_vector: str
    dual_z_vector: str
    z_knotted: bool
    dual_z_knotted: bool
    swapped_edges: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_duality(g: EmbeddedGraph) -> DualityReport:
    corr = dual_graph(g)
    zs = enumerate_zigzags(g)
    dzs = enumerate_zigzags(corr.dual)
    rep = DualityReport(z_vector_string(zs), z_vector_string(dzs), len(zs) == 1, len(dzs) == 1)
    if zs.z_vector != dzs.z_vector:
        rep.failures.append(f"z-vectors differ: {rep.z_vector} vs {rep.dual_z_vector}")
    if rep.z_knotted != rep.dual_z_knotted:
        rep.failures.append("z-knottedness differs between graph and dual")
    if rep.z_knotted and rep.dual_z_knotted:
        t = edge_types(zs)
        dt = edge_types(dzs)
        for e, de in corr.edge_to_dual_edge.items():
            if t[e] is dt[de]:
                rep.failures.append(f"edge {e} and dual edge {de} share type {t[e].value}")
            else:
                rep.swapped_edges += 1
    return rep
