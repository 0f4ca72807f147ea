"""Graphs embedded in closed surfaces, given by their face lists.

A graph is described only by its faces, each a cyclic sequence of vertex
tokens.  Edges and incidences are derived.  No orientation is assumed, so the
same representation covers orientable and non-orientable surfaces.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

Vertex = Union[int, str]
Edge = tuple  # (u, v) with vertex_key(u) < vertex_key(v)


class EmbeddingError(ValueError):
    """Raised for malformed face lists or when a valid embedding is required."""


def vertex_key(v: Vertex) -> tuple:
    # ints before strings; ints numerically, strings lexicographically
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, str(v))


def sorted_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


def edge_of(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if vertex_key(u) < vertex_key(v) else (v, u)


def canonical_cycle(seq: Sequence[Vertex]) -> tuple:
    """Least rotation of ``seq`` or of its reversal, under :func:`vertex_key`.

    >>> canonical_cycle((3, 4, 1, 2))
    (1, 2, 3, 4)
    >>> canonical_cycle((4, 3, 2, 1))
    (1, 2, 3, 4)
    """
    seq = tuple(seq)
    n = len(seq)
    if n == 0:
        return seq
    keys = [vertex_key(v) for v in seq]
    low = min(keys)
    best = None
    best_seq = None
    rev = seq[::-1]
    rkeys = keys[::-1]
    for s, k in ((seq, keys), (rev, rkeys)):
        # only rotations that start at a minimal element can win
        for i in range(n):
            if k[i] != low:
                continue
            cand = k[i:] + k[:i]
            if best is None or cand < best:
                best = cand
                best_seq = s[i:] + s[:i]
    return best_seq


class EmbeddedGraph:
    """A closed 2-cell embedding given by its faces.

    Faces are stored canonically (see :func:`canonical_cycle`) and sorted.
    Duplicate faces are kept so that :func:`validate_embedding` can report
    them.  Instances are treated as immutable.
    """

    def __init__(self, faces: Iterable[Sequence[Vertex]]):
        canon = []
        for face in faces:
            face = tuple(face)
            if len(face) < 3:
                raise EmbeddingError(f"face {face} has fewer than 3 vertices")
            if len(set(face)) != len(face):
                raise EmbeddingError(f"face {face} repeats a vertex")
            canon.append(canonical_cycle(face))
        if not canon:
            raise EmbeddingError("face list is empty")
        canon.sort(key=lambda f: [vertex_key(v) for v in f])
        self.faces: tuple = tuple(canon)

        vf = defaultdict(list)
        ef = defaultdict(list)
        windows = {}
        for i, face in enumerate(self.faces):
            n = len(face)
            for j, v in enumerate(face):
                vf[v].append(i)
                ef[edge_of(v, face[(j + 1) % n])].append(i)
                x, y, z = face[j - 1], v, face[(j + 1) % n]
                windows.setdefault((x, y, z), i)
                windows.setdefault((z, y, x), i)
        self.vertices: tuple = tuple(sorted_vertices(vf))
        self.edges: tuple = tuple(sorted(ef, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))))
        self.vertex_faces: dict = dict(vf)
        self.edge_faces: dict = dict(ef)
        # ordered triple consecutive on a face -> that face's index
        self.window_faces: dict = windows
        adj = defaultdict(set)
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = dict(adj)
        self._face_index = {}
        for i, face in enumerate(self.faces):
            self._face_index.setdefault(face, i)

    def __repr__(self):
        return f"EmbeddedGraph(V={len(self.vertices)}, E={len(self.edges)}, F={len(self.faces)})"

    def __eq__(self, other):
        return isinstance(other, EmbeddedGraph) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    @property
    def is_triangulation(self) -> bool:
        return all(len(f) == 3 for f in self.faces)

    def neighbors(self, v: Vertex) -> set:
        return self._adj.get(v, set())

    def degree(self, v: Vertex) -> int:
        return len(self._adj.get(v, ()))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj.get(u, ())

    def face_index(self, face: Sequence[Vertex]) -> int:
        """Index of ``face`` given in any rotation or direction."""
        key = canonical_cycle(face)
        if key in self._face_index:
            return self._face_index[key]
        raise KeyError(f"{tuple(face)} is not a face")

    def find_face(self, vertices: Iterable[Vertex]) -> int:
        """Index of the unique face whose vertex set is ``vertices`` (an index
        is passed through)."""
        if isinstance(vertices, int):
            return vertices
        target = set(vertices)
        hits = [i for i in self.vertex_faces.get(next(iter(target)), ())
                if set(self.faces[i]) == target]
        if len(hits) != 1:
            raise KeyError(f"no unique face with vertices {sorted_vertices(target)}")
        return hits[0]

    def other_face(self, edge: Edge, fi: int) -> int:
        fs = self.edge_faces[edge_of(*edge)]
        if len(fs) != 2:
            raise EmbeddingError(f"edge {edge} lies in {len(fs)} faces")
        return fs[1] if fs[0] == fi else fs[0]


def build_graph(face_list: Iterable[Sequence[Vertex]]) -> EmbeddedGraph:
    return EmbeddedGraph(face_list)


@dataclass(frozen=True)
class Violation:
    rule: str
    elements: tuple

    def __str__(self):
        return f"{self.rule}: {self.elements}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set:
        return {v.rule for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def _check_connected(g: EmbeddedGraph, out: list) -> None:
    start = g.vertices[0]
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                todo.append(u)
    if len(seen) != len(g.vertices):
        rest = [v for v in g.vertices if v not in seen]
        out.append(Violation("connected", tuple(rest)))


def _check_face_pairs(g: EmbeddedGraph, out: list) -> None:
    shared = Counter()
    for v in g.vertices:
        fs = g.vertex_faces[v]
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                a, b = sorted((fs[i], fs[j]))
                shared[a, b] += 1
    edge_sets = {}

    def edges_of(i):
        if i not in edge_sets:
            f = g.faces[i]
            edge_sets[i] = {edge_of(f[k], f[(k + 1) % len(f)]) for k in range(len(f))}
        return edge_sets[i]

    for (i, j), count in sorted(shared.items()):
        if count < 2:
            continue
        common = set(g.faces[i]) & set(g.faces[j])
        if len(common) == 2:
            e = edge_of(*common)
            if e in edges_of(i) and e in edges_of(j):
                continue
        out.append(Violation("face-intersection", (g.faces[i], g.faces[j])))


def _check_vertex_links(g: EmbeddedGraph, out: list) -> None:
    # faces around each vertex must close up into a single disc
    for v in g.vertices:
        link = defaultdict(list)
        for fi in g.vertex_faces[v]:
            face = g.faces[fi]
            k = face.index(v)
            p, q = face[k - 1], face[(k + 1) % len(face)]
            link[p].append(q)
            link[q].append(p)
        if any(len(nbrs) != 2 for nbrs in link.values()):
            continue  # already reported as an edge-face-count violation
        start = next(iter(link))
        seen = {start}
        todo = [start]
        while todo:
            u = todo.pop()
            for w in link[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(link):
            out.append(Violation("vertex-link", (v,)))


def validate_embedding(g: EmbeddedGraph) -> ValidationReport:
    """Check every condition of a closed 2-cell embedding; report all failures."""
    out = []
    _check_connected(g, out)
    for e in g.edges:
        n = len(g.edge_faces[e])
        if n != 2:
            out.append(Violation("edge-face-count", (e, n)))
    _check_face_pairs(g, out)
    _check_vertex_links(g, out)
    if not out:
        from zknot.zigzag import enumerate_zigzags

        for z in enumerate_zigzags(g).zigzags:
            if z.length <= 3:
                out.append(Violation("zigzag-length", z.sequence))
    return ValidationReport(out)


def require_valid(g: EmbeddedGraph) -> None:
    report = validate_embedding(g)
    if not report.ok:
        raise EmbeddingError(f"invalid embedding:\n{report}")


def euler_characteristic(g: EmbeddedGraph) -> int:
    return len(g.vertices) - len(g.edges) + len(g.faces)


@dataclass(frozen=True)
class DualCorrespondence:
    dual: EmbeddedGraph
    face_to_dual_vertex: dict
    edge_to_dual_edge: dict


def vertex_star(g: EmbeddedGraph, v: Vertex) -> list:
    """Indices of the faces around ``v`` in the cyclic order of the embedding."""
    first = g.vertex_faces[v][0]
    face = g.faces[first]
    k = face.index(v)
    nxt = face[(k + 1) % len(face)]
    star = [first]
    fi = first
    while True:
        fi = g.other_face((v, nxt), fi)
        if fi == first:
            return star
        star.append(fi)
        face = g.faces[fi]
        k = face.index(v)
        p, q = face[k - 1], face[(k + 1) % len(face)]
        nxt = q if p == nxt else p


def dual_graph(g: EmbeddedGraph) -> DualCorrespondence:
    """Faces become vertices (numbered by face index), vertex stars become faces."""
    require_valid(g)
    dual = EmbeddedGraph(vertex_star(g, v) for v in g.vertices)
    f2v = {face: i for i, face in enumerate(g.faces)}
    e2e = {e: edge_of(*g.edge_faces[e]) for e in g.edges}
    return DualCorrespondence(dual, f2v, e2e)


def _profile(g: EmbeddedGraph, v: Vertex) -> tuple:
    return (g.degree(v), tuple(sorted(len(g.faces[i]) for i in g.vertex_faces[v])))


def are_isomorphic(g1: EmbeddedGraph, g2: EmbeddedGraph) -> Optional[dict]:
    """A vertex bijection carrying the faces of ``g1`` onto those of ``g2``.

    Plain backtracking, candidates filtered by local degree profiles and
    checked against adjacency and completed faces as the map grows.
    """
    if (len(g1.vertices), len(g1.edges), len(g1.faces)) != (len(g2.vertices), len(g2.edges), len(g2.faces)):
        return None
    p1 = {v: _profile(g1, v) for v in g1.vertices}
    p2 = {v: _profile(g2, v) for v in g2.vertices}
    if Counter(p1.values()) != Counter(p2.values()):
        return None
    if Counter(len(f) for f in g1.faces) != Counter(len(f) for f in g2.faces):
        return None
    by_profile = defaultdict(list)
    for v in g2.vertices:
        by_profile[p2[v]].append(v)

    # BFS order from the vertex with the rarest profile
    freq = Counter(p1.values())
    start = min(g1.vertices, key=lambda v: (freq[p1[v]], vertex_key(v)))
    order = [start]
    seen = {start}
    i = 0
    while i < len(order):
        for u in sorted_vertices(g1.neighbors(order[i])):
            if u not in seen:
                seen.add(u)
                order.append(u)
        i += 1
    if len(order) != len(g1.vertices):
        return None
    pos = {v: k for k, v in enumerate(order)}
    # faces to check once their last vertex (in BFS order) is placed
    closing = defaultdict(list)
    for face in g1.faces:
        closing[max(face, key=pos.__getitem__)].append(face)
    target_faces = Counter(g2.faces)

    mapping: dict = {}
    used: set = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        placed = [u for u in g1.neighbors(v) if u in mapping]
        if placed:
            pool = g2.neighbors(mapping[placed[0]])
        else:
            pool = by_profile[p1[v]]
        for w in sorted_vertices(pool):
            if w in used or p2[w] != p1[v]:
                continue
            ok = True
            for u, mu in mapping.items():
                if g1.has_edge(v, u) != g2.has_edge(w, mu):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            if all(canonical_cycle([mapping[x] for x in f]) in target_faces
                   for f in closing[v]):
                used.add(w)
                if extend(k + 1):
                    return True
                used.discard(w)
            del mapping[v]
        return False

    if extend(0):
        return dict(mapping)
    return None
