"""Segment words of connected sums, by face classes and identification.

Keys are ``(kind of F, kind of F')`` using the short names ``od``, ``ev``,
``f1`` (first-type (2,2,2)), ``f2`` (second-type (2,2,2)).  Each row maps the
images ``(g(x), g(y), g(z))`` of the labelled vertices of ``F`` to the list of
segment words of the glued graph.  Labels are ``a, 1, 2`` for (1,1,2) faces
and ``a, b, c`` for (2,2,2) faces; primes mark the second summand.

Rows tagged ``table`` are the 50 tabulated cases; ``extra`` rows cover the
remaining identifications of the same class pairs.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRow:
    source: str
    kinds: tuple
    images: tuple
    words: tuple | None
    zigzags: int

    @property
    def z_knotted(self) -> bool:
        return self.zigzags == 1


def _row(source, kinds, images, *words):
    return TableRow(source, kinds, tuple(images.split()), tuple(words), len(words))


ROWS = [
    # (1,1,2)-odd + (1,1,2)-odd
    _row("extra", ("od", "od"), "a' 1' 2'", "A, C'^-1, B, A', C^-1, B'"),
    _row("extra", ("od", "od"), "a' 2' 1'", "A, C', B, B'^-1, C^-1, A'^-1"),
    _row("table", ("od", "od"), "1' 2' a'", "A, B'^-1", "B, C', C, A'"),
    _row("table", ("od", "od"), "1' a' 2'", "B, B'", "A, A'^-1, C, C'^-1"),
    _row("table", ("od", "od"), "2' a' 1'", "B, A'^-1", "A, B', C, C'"),
    _row("table", ("od", "od"), "2' 1' a'", "A, A'", "B, C'^-1, C, B'^-1"),
    # (1,1,2)-even + (1,1,2)-even
    _row("table", ("ev", "ev"), "1' 2' a'", "A, B', C, A', B^-1, C'^-1"),
    _row("table", ("ev", "ev"), "1' a' 2'", "A, C', C^-1, A'^-1, B, B'^-1"),
    _row("table", ("ev", "ev"), "2' a' 1'", "A, B'^-1, C^-1, A', B, C'"),
    _row("table", ("ev", "ev"), "2' 1' a'", "A, C'^-1, C, A'^-1, B^-1, B'"),
    _row("extra", ("ev", "ev"), "a' 1' 2'", "A, A'", "B, C'^-1", "C, B'^-1"),
    _row("extra", ("ev", "ev"), "a' 2' 1'", "A, A'^-1", "B, B'", "C, C'"),
    # (1,1,2)-even + (1,1,2)-odd
    _row("table", ("ev", "od"), "a' 1' 2'", "A, A', C^-1, C', B^-1, B'"),
    _row("table", ("ev", "od"), "a' 2' 1'", "A, B'^-1, C^-1, C'^-1, B^-1, A'^-1"),
    _row("table", ("ev", "od"), "1' 2' a'", "C, A'", "A, C', B, B'^-1"),
    _row("table", ("ev", "od"), "1' a' 2'", "B, A'^-1", "A, B', C, C'^-1"),
    _row("table", ("ev", "od"), "2' a' 1'", "B, B'", "A, A'^-1, C, C'"),
    _row("table", ("ev", "od"), "2' 1' a'", "C, B'^-1", "A, C'^-1, B, A'"),
    # (2,2,2)-first + (1,1,2)-odd
    _row("table", ("f1", "od"), "a' 1' 2'", "A, C', B, A', C^-1, B'"),
    _row("table", ("f1", "od"), "a' 2' 1'", "A, C'^-1, B, B'^-1, C^-1, A'^-1"),
    _row("table", ("f1", "od"), "1' 2' a'", "A, A'^-1, C^-1, C'^-1, B^-1, B'^-1"),
    _row("table", ("f1", "od"), "1' a' 2'", "A, B'^-1, B^-1, A'^-1, C, C'^-1"),
    _row("table", ("f1", "od"), "2' a' 1'", "A, A', B^-1, B', C, C'"),
    _row("table", ("f1", "od"), "2' 1' a'", "A, B', C^-1, C', B^-1, A'"),
    # (2,2,2)-first + (1,1,2)-even
    _row("table", ("f1", "ev"), "a' 1' 2'", "A, B', C^-1, C', B, A'"),
    _row("table", ("f1", "ev"), "a' 2' 1'", "A, C'^-1, C^-1, B'^-1, B, A'^-1"),
    _row("table", ("f1", "ev"), "1' 2' a'", "A, B'^-1, B^-1, A'^-1, C^-1, C'^-1"),
    _row("table", ("f1", "ev"), "1' a' 2'", "A, A'^-1, C, C'^-1, B^-1, B'^-1"),
    _row("table", ("f1", "ev"), "2' a' 1'", "A, A', C, B', B^-1, C'"),
    _row("table", ("f1", "ev"), "2' 1' a'", "A, C', B^-1, A', C^-1, B'"),
    # (2,2,2)-first + (2,2,2)-first
    _row("table", ("f1", "f1"), "a' b' c'", "A, C', B, A', C, B'"),
    _row("table", ("f1", "f1"), "b' c' a'", "A, B', B, C', C, A'"),
    _row("table", ("f1", "f1"), "c' a' b'", "A, A', B, B', C, C'"),
    _row("table", ("f1", "f1"), "c' b' a'", "A, A'^-1, B, C'^-1, C, B'^-1"),
    _row("table", ("f1", "f1"), "b' a' c'", "A, B'^-1, B, A'^-1, C, C'^-1"),
    _row("table", ("f1", "f1"), "a' c' b'", "A, C'^-1, B, B'^-1, C, A'^-1"),
    # (2,2,2)-first + (2,2,2)-second
    _row("table", ("f1", "f2"), "a' b' c'", "A, B', C, C', B, A'"),
    _row("table", ("f1", "f2"), "b' c' a'", "A, C', C, A', B, B'"),
    _row("table", ("f1", "f2"), "c' a' b'", "A, A', C, B', B, C'"),
    _row("table", ("f1", "f2"), "c' b' a'", "A, B'^-1, C, A'^-1, B, C'^-1"),
    _row("table", ("f1", "f2"), "b' a' c'", "A, A'^-1, C, C'^-1, B, B'^-1"),
    _row("table", ("f1", "f2"), "a' c' b'", "A, C'^-1, C, B'^-1, B, A'^-1"),
    # (2,2,2)-second + (1,1,2)-odd
    _row("table", ("f2", "od"), "a' 1' 2'", "A, A', C^-1, C'^-1, B^-1, B'"),
    _row("table", ("f2", "od"), "a' 2' 1'", "A, B'^-1, C^-1, C', B^-1, A'^-1"),
    _row("table", ("f2", "od"), "1' 2' a'", "A, C', B, A'^-1, C^-1, B'^-1"),
    _row("table", ("f2", "od"), "1' a' 2'", "A, B', B^-1, A', C, C'^-1"),
    _row("table", ("f2", "od"), "2' a' 1'", "A, A'^-1, B^-1, B'^-1, C, C'"),
    _row("table", ("f2", "od"), "2' 1' a'", "A, C'^-1, B, B', C^-1, A'"),
    # (2,2,2)-second + (1,1,2)-even
    _row("table", ("f2", "ev"), "a' 1' 2'", "A, A'", "B, B', C^-1, C'^-1"),
    _row("table", ("f2", "ev"), "a' 2' 1'", "A, A'^-1", "B, C'^-1, C^-1, B'"),
    _row("table", ("f2", "ev"), "1' 2' a'", "C, A'", "A, B', B^-1, C'^-1"),
    _row("table", ("f2", "ev"), "1' a' 2'", "B, A'^-1", "A, C', C^-1, B'^-1"),
    _row("table", ("f2", "ev"), "2' a' 1'", "B, A'", "A, B'^-1, C^-1, C'"),
    _row("table", ("f2", "ev"), "2' 1' a'", "C, A'^-1", "A, C'^-1, B^-1, B'"),
]

# both faces second-type (2,2,2): every segment starts and ends on the same
# ordered pair, so each zigzag is a two-letter word X, X' (words unspecified)
for _images in ("a' b' c'", "b' c' a'", "c' a' b'", "c' b' a'", "b' a' c'", "a' c' b'"):
    ROWS.append(TableRow("extra", ("f2", "f2"), tuple(_images.split()), None, 3))

# the special gluing of two bipyramids with 2k faces, k odd
EVEN_BIPYRAMID_WORD = "A, C'^-1, C^-1, A', B, B'"

TABLE_ROWS = [r for r in ROWS if r.source == "table"]

LOOKUP = {(r.kinds, r.images): r for r in ROWS}
KIND_PAIRS = {r.kinds for r in ROWS}

LABEL_NAMES = {
    True: ("a", "1", "2"),   # (1,1,2) face
    False: ("a", "b", "c"),  # (2,2,2) face
}
