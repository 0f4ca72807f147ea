"""Named graphs and a deterministic corpus built by iterated gluing.

Recipes are plain nested tuples so they can be stored, printed and replayed:

* ``("tetrahedron",)``, ``("cube",)``, ``("bipyramid", n)``
* ``("sum", left, face, right, images)`` where ``face`` lists vertices of
  ``left`` and ``images`` their partners in ``right`` (original names).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from zknot.classify import FaceKind, classify_faces
from zknot.embedding import EmbeddedGraph, EmbeddingError
from zknot.surgery import GluingMap, glue
from zknot.zigzag import ZigzagSet, enumerate_zigzags


def tetrahedron() -> EmbeddedGraph:
    return EmbeddedGraph([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def cube() -> EmbeddedGraph:
    return EmbeddedGraph([
        (1, 2, 3, 4), (5, 6, 7, 8),
        (1, 2, 6, 5), (2, 3, 7, 6), (3, 4, 8, 7), (4, 1, 5, 8),
    ])


def bipyramid(n: int) -> EmbeddedGraph:
    """The n-gon ``1..n`` coned to two apexes ``a`` and ``b``."""
    if n < 3:
        raise EmbeddingError("bipyramids need n >= 3")
    return EmbeddedGraph([(apex, i, i % n + 1) for apex in "ab" for i in range(1, n + 1)])


def section7_recipe(k: int, k2: int) -> tuple:
    if k < 3 or k2 < 3 or k % 2 == 0 or k2 % 2 == 0:
        raise EmbeddingError("both parameters must be odd and at least 3")
    return ("sum", ("bipyramid", 2 * k), ("a", 1, 2), ("bipyramid", 2 * k2), (2, "a", 1))


def section7_sum(k: int, k2: int) -> EmbeddedGraph:
    """Glue BP_2k to BP_2k' along (a,1,2), sending a, 1, 2 to 2', a', 1'."""
    return build(section7_recipe(k, k2))


@lru_cache(maxsize=None)
def build(recipe: tuple) -> EmbeddedGraph:
    head = recipe[0]
    if head == "tetrahedron":
        return tetrahedron()
    if head == "cube":
        return cube()
    if head == "bipyramid":
        return bipyramid(recipe[1])
    if head == "sum":
        _, left, face, right, images = recipe
        gl, gr = build(left), build(right)
        try:
            target = gr.faces[gr.find_face(images)]
        except KeyError as exc:
            raise EmbeddingError(f"recipe {recipe}: {exc}") from None
        return glue(gl, gr, GluingMap(tuple(face), target, tuple(images))).graph
    raise EmbeddingError(f"unknown recipe {recipe!r}")


def describe(recipe: tuple) -> str:
    head = recipe[0]
    if head == "bipyramid":
        return f"BP_{recipe[1]}"
    if head in ("tetrahedron", "cube"):
        return {"tetrahedron": "K4", "cube": "Q3"}[head]
    _, left, face, right, images = recipe
    pairs = " ".join(f"{u}:{v}'" for u, v in zip(face, images))
    return f"({describe(left)} # {describe(right)} via {pairs})"


@dataclass
class CorpusEntry:
    name: str
    recipe: tuple
    graph: EmbeddedGraph
    zigzags: ZigzagSet = field(repr=False)
    face_classes: dict | None = field(default=None, repr=False)

    @property
    def z_knotted(self) -> bool:
        return len(self.zigzags) == 1

    @property
    def provenance(self) -> str:
        return describe(self.recipe)

    def faces_of(self, kind: FaceKind) -> list:
        if not self.face_classes:
            return []
        return [f for f, c in self.face_classes.items() if c.kind is kind]


BP = lambda n: ("bipyramid", n)  # noqa: E731

BP7_PAIR = ("sum", BP(7), ("a", 1, 2), BP(7), ("a", 1, 2))
BP7_PAIR_SWAP = ("sum", BP(7), ("a", 1, 2), BP(7), ("a", 2, 1))
BP3_PAIR = ("sum", BP(3), ("a", 1, 2), BP(3), ("a", 1, 2))
BP5_PAIR = ("sum", BP(5), ("a", 1, 2), BP(5), (1, 2, "a"))

DEFAULT_RECIPES = {
    **{f"BP_{n}": BP(n) for n in range(3, 16)},
    "K4#K4": ("sum", ("tetrahedron",), (1, 2, 3), ("tetrahedron",), (1, 2, 3)),
    "BP_7#BP_7": BP7_PAIR,
    "BP_7#BP_7-swap": BP7_PAIR_SWAP,
    "BP_3#BP_3": BP3_PAIR,
    "BP_7#BP_3": ("sum", BP(7), ("a", 1, 2), BP(3), ("a", 1, 2)),
    "BP_5#BP_5-12a": BP5_PAIR,
    "BP_5#BP_5-1a2": ("sum", BP(5), ("a", 1, 2), BP(5), (1, "a", 2)),
    "BP_5#BP_5-2a1": ("sum", BP(5), ("a", 1, 2), BP(5), (2, "a", 1)),
    "BP_5#BP_5-21a": ("sum", BP(5), ("a", 1, 2), BP(5), (2, 1, "a")),
    "BP_6#BP_6": section7_recipe(3, 3),
    "BP_6#BP_10": section7_recipe(3, 5),
    # second generation: glue onto the (2,2,2) faces produced above
    "BP_7#BP_7#BP_3": ("sum", BP7_PAIR, ("b", 1, 2), BP(3), ("a", 1, 2)),
    "BP_5#BP_5#BP_5": ("sum", BP5_PAIR, ("b", 4, 5), BP(5), ("a", 1, 2)),
    "BP_6#BP_6#BP_3": ("sum", section7_recipe(3, 3), ("a", 2, 3), BP(3), ("a", 1, 2)),
    "BP_6#BP_6#BP_3#BP_3": ("sum", section7_recipe(3, 3), ("a", 2, 3), BP3_PAIR, ("b", 1, 2)),
}


def make_entry(name: str, recipe: tuple) -> CorpusEntry:
    g = build(recipe)
    zs = enumerate_zigzags(g)
    classes = classify_faces(g, zs) if len(zs) == 1 and g.is_triangulation else None
    return CorpusEntry(name, recipe, g, zs, classes)


def corpus_build(recipes: dict | None = None) -> list:
    recipes = DEFAULT_RECIPES if recipes is None else recipes
    return [make_entry(name, recipe) for name, recipe in recipes.items()]
