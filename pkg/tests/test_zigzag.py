import pytest
from hypothesis import given, settings, strategies as st

from zknot.embedding import EmbeddingError, canonical_cycle, dual_graph
from zknot.generators import DEFAULT_RECIPES, bipyramid, build, cube, tetrahedron
from zknot.zigzag import (
    StepState,
    Zigzag,
    canonical_form,
    enumerate_zigzags,
    start_state,
    trace_zigzag,
    z_vector_string,
    zigzag_step,
)

BP3_ZIGZAG = ("a", 1, 2, "b", 3, 1, "a", 2, 3, "b", 1, 2, "a", 3, 1, "b", 2, 3)


def test_step_k4():
    g = tetrahedron()
    s = zigzag_step(g, start_state(g, (1, 2, 3)))
    assert s.triple == (2, 3, 4)
    assert set(s.face) == {2, 3, 4}


def test_step_bp3():
    g = bipyramid(3)
    s = zigzag_step(g, start_state(g, ("a", 1, 2)))
    assert s.triple == (1, 2, "b")
    assert set(s.face) == {"b", 1, 2}


def test_step_reverses():
    g = bipyramid(5)
    for triple in list(g.window_faces)[:12]:
        x, y, z = triple
        nxt = zigzag_step(g, start_state(g, triple)).triple
        back = zigzag_step(g, start_state(g, nxt[::-1])).triple
        assert back == (z, y, x)


def test_step_rejects_non_window():
    g = bipyramid(5)
    with pytest.raises(EmbeddingError):
        zigzag_step(g, StepState((1, 3, 5), ()))


def test_trace_k4():
    z = trace_zigzag(tetrahedron(), (1, 2, 3))
    assert z.length == 4
    assert z.sequence == (1, 2, 3, 4)


def test_trace_bp3_matches_published_cycle():
    z = trace_zigzag(bipyramid(3), ("a", 1, 2))
    assert z.sequence == BP3_ZIGZAG


@pytest.mark.parametrize("g, vector", [
    (tetrahedron(), "4^3"),
    (cube(), "6^4"),
    (bipyramid(7), "42"),
    (bipyramid(4), "6^4"),
    (bipyramid(6), "18^2"),
])
def test_z_vectors(g, vector):
    assert z_vector_string(enumerate_zigzags(g)) == vector


def test_z_vector_string_formats():
    assert z_vector_string([18, 6, 6]) == "6^2, 18"


@pytest.mark.parametrize("a, b", [((1, 2, 3, 4), (3, 4, 1, 2)), ((1, 2, 3, 4), (4, 3, 2, 1))])
def test_canonical_form_equivalences(a, b):
    assert canonical_form(a) == canonical_form(b)
    assert Zigzag(a).same_as(Zigzag(b))


def test_k4_zigzags_distinct():
    zs = enumerate_zigzags(tetrahedron())
    assert len({z.canonical_key for z in zs}) == 3


def test_zigzags_stored_canonically():
    for z in enumerate_zigzags(bipyramid(6)):
        assert z.sequence == canonical_cycle(z.sequence)


def test_passages_cover_each_triangle_thrice():
    g = bipyramid(6)
    zs = enumerate_zigzags(g)
    for fi, ps in zs.passages_by_face().items():
        assert len(ps) == 3


def _check_zigzag_conditions(g, z):
    # consecutive pairs are edges, each window lies on a face, and windows
    # one step apart lie on distinct faces
    for i, w in z.windows():
        assert g.has_edge(w[0], w[1])
        assert w in g.window_faces
        assert g.window_faces[w] != g.window_faces[z.window(i + 1)]


@pytest.mark.parametrize("name", ["BP_3", "BP_6", "K4#K4", "BP_7#BP_7", "BP_5#BP_5-12a", "BP_6#BP_6"])
def test_zigzag_conditions(name):
    g = build(DEFAULT_RECIPES[name])
    zs = enumerate_zigzags(g)
    for z in zs:
        _check_zigzag_conditions(g, z)
    assert sum(zs.z_vector) == 2 * len(g.edges)


@settings(max_examples=25, deadline=None)
@given(name=st.sampled_from(sorted(DEFAULT_RECIPES)), data=st.data())
def test_reseeding_gives_same_zigzag(name, data):
    g = build(DEFAULT_RECIPES[name])
    zs = enumerate_zigzags(g)
    z = data.draw(st.sampled_from(zs.zigzags))
    i = data.draw(st.integers(0, z.length - 1))
    again = trace_zigzag(g, z.window(i))
    assert again.canonical_key == z.canonical_key
    assert trace_zigzag(g, z.window(i)[::-1]).canonical_key == z.canonical_key


@settings(max_examples=25, deadline=None)
@given(name=st.sampled_from(sorted(DEFAULT_RECIPES)))
def test_length_sum_and_no_self_reversal(name):
    g = build(DEFAULT_RECIPES[name])
    zs = enumerate_zigzags(g)
    assert sum(zs.z_vector) == 2 * len(g.edges)
    for z in zs:
        windows = {w for _, w in z.windows()}
        assert not windows & {w[::-1] for w in windows}


@settings(max_examples=15, deadline=None)
@given(n=st.integers(3, 12))
def test_dual_z_vector(n):
    g = bipyramid(n)
    assert enumerate_zigzags(dual_graph(g).dual).z_vector == enumerate_zigzags(g).z_vector


@settings(max_examples=30, deadline=None)
@given(seq=st.lists(st.integers(0, 5), min_size=3, max_size=10), k=st.integers(0, 20))
def test_canonical_form_invariant(seq, k):
    z = Zigzag(tuple(seq))
    assert canonical_form(z.rotated(k)) == canonical_form(z)
    assert canonical_form(z.reversed()) == canonical_form(z)
