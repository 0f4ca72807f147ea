"""Zigzags (Petrie walks) of embedded graphs.

A zigzag state is an ordered triple ``(x, y, z)`` of vertices consecutive on
some face.  The next state is ``(y, z, w)`` where ``w`` is the neighbour of
``z`` on the *other* face through the edge ``yz``.  Orbits of this map are the
zigzags; an orbit and its reversal are one zigzag.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from zknot.embedding import EmbeddedGraph, EmbeddingError, canonical_cycle, vertex_key


class ZigzagError(RuntimeError):
    """Internal consistency failure while tracing zigzags."""


@dataclass(frozen=True)
class StepState:
    triple: tuple
    face: tuple


def window_face(g: EmbeddedGraph, triple) -> int:
    try:
        return g.window_faces[tuple(triple)]
    except KeyError:
        raise EmbeddingError(f"{triple} is not consecutive on any face") from None


def _next_vertex(g: EmbeddedGraph, x, y, z):
    fi = g.window_faces[x, y, z]
    gi = g.other_face((y, z), fi)
    face = g.faces[gi]
    k = face.index(z)
    p, q = face[k - 1], face[(k + 1) % len(face)]
    return q if p == y else p


def zigzag_step(g: EmbeddedGraph, s: StepState) -> StepState:
    x, y, z = s.triple
    window_face(g, s.triple)
    w = _next_vertex(g, x, y, z)
    return StepState((y, z, w), g.faces[g.window_faces[y, z, w]])


def start_state(g: EmbeddedGraph, triple) -> StepState:
    return StepState(tuple(triple), g.faces[window_face(g, triple)])


@dataclass(frozen=True)
class Zigzag:
    """A closed zigzag, stored in one direction from one starting point."""

    sequence: tuple

    @property
    def length(self) -> int:
        return len(self.sequence)

    @cached_property
    def canonical_key(self) -> tuple:
        return canonical_cycle(self.sequence)

    @property
    def traversals(self) -> tuple:
        s, n = self.sequence, len(self.sequence)
        return tuple((s[i], s[(i + 1) % n]) for i in range(n))

    def window(self, i: int) -> tuple:
        s, n = self.sequence, len(self.sequence)
        return (s[i % n], s[(i + 1) % n], s[(i + 2) % n])

    def windows(self):
        for i in range(len(self.sequence)):
            yield i, self.window(i)

    def reversed(self) -> "Zigzag":
        return Zigzag(self.sequence[::-1])

    def rotated(self, i: int) -> "Zigzag":
        i %= len(self.sequence)
        return Zigzag(self.sequence[i:] + self.sequence[:i])

    def same_as(self, other: "Zigzag") -> bool:
        return self.canonical_key == other.canonical_key


def canonical_form(z: Zigzag | Sequence) -> tuple:
    if isinstance(z, Zigzag):
        return z.canonical_key
    return canonical_cycle(z)


def trace_zigzag(g: EmbeddedGraph, seed) -> Zigzag:
    """Follow the step map from ``seed`` (a triple or StepState) until it closes."""
    triple = seed.triple if isinstance(seed, StepState) else tuple(seed)
    window_face(g, triple)
    x, y, z = triple
    seq = []
    limit = 4 * len(g.edges) + 1
    while True:
        seq.append(x)
        x, y, z = y, z, _next_vertex(g, x, y, z)
        if (x, y, z) == triple:
            return Zigzag(tuple(seq))
        if len(seq) > limit:
            raise ZigzagError(f"trace from {triple} did not close")


@dataclass
class ZigzagSet:
    """All zigzags of a graph, each stored in canonical orientation."""

    graph: EmbeddedGraph
    zigzags: tuple
    _passages: dict = field(default=None, repr=False, compare=False)

    @property
    def z_vector(self) -> tuple:
        return tuple(sorted(z.length for z in self.zigzags))

    def __len__(self):
        return len(self.zigzags)

    def __iter__(self):
        return iter(self.zigzags)

    def canonical_keys(self) -> Counter:
        return Counter(z.canonical_key for z in self.zigzags)

    def passages_by_face(self) -> dict:
        """face index -> list of (zigzag index, position, window)."""
        if self._passages is None:
            out = {i: [] for i in range(len(self.graph.faces))}
            for zi, z in enumerate(self.zigzags):
                for pos, w in z.windows():
                    out[self.graph.window_faces[w]].append((zi, pos, w))
            self._passages = out
        return self._passages


def enumerate_zigzags(g: EmbeddedGraph) -> ZigzagSet:
    visited = set()
    found = []
    # window_faces is filled in sorted face order, so iteration is deterministic
    for triple in g.window_faces:
        if triple in visited:
            continue
        z = trace_zigzag(g, triple)
        orbit = {z.window(i) for i in range(z.length)}
        back = {(c, b, a) for (a, b, c) in orbit}
        if orbit & back:
            raise ZigzagError(f"zigzag {z.sequence} is its own reversal")
        visited |= orbit
        visited |= back
        found.append(Zigzag(z.canonical_key))
    found.sort(key=lambda z: (z.length, [vertex_key(v) for v in z.sequence]))
    return ZigzagSet(g, tuple(found))


def z_vector_string(zs: ZigzagSet | Sequence[int]) -> str:
    """Lengths with multiplicities, ascending: ``"4^3"``, ``"42"``, ``"6^2, 18"``."""
    lengths = zs.z_vector if isinstance(zs, ZigzagSet) else tuple(sorted(zs))
    counts = Counter(lengths)
    parts = []
    for n in sorted(counts):
        parts.append(str(n) if counts[n] == 1 else f"{n}^{counts[n]}")
    return ", ".join(parts)
