from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from zknot import tables
from zknot.casebook import TABLE_INSTANCES, check_row, representative_faces
from zknot.classify import FaceKind, classify_face, classify_faces
from zknot.embedding import are_isomorphic, euler_characteristic, validate_embedding
from zknot.generators import DEFAULT_RECIPES, BP7_PAIR, BP5_PAIR, bipyramid, build, make_entry, section7_recipe, tetrahedron
from zknot.surgery import (
    GluingMap,
    Letter,
    SegmentWord,
    SurgeryError,
    compose_zigzags,
    connected_sum,
    enumerate_identifications,
    expand_segment_word,
    glue,
    normalize_words,
    predict_sum_zigzags,
    predict_z_knotted,
    segment_decomposition,
    theorem1_audit,
)
from zknot.zigzag import enumerate_zigzags

F = ("a", 1, 2)


def words_of(g1, g2, images, f1=F, f2=F):
    gmap = GluingMap(f1, g2.faces[g2.find_face(f2)], tuple(images))
    return [str(w) for w in predict_sum_zigzags(g1, g2, gmap, f1, f2).words]


# gluing maps


def test_six_identifications():
    maps = enumerate_identifications(F, F)
    assert len(maps) == 6
    assert len({m.images for m in maps}) == 6
    assert GluingMap(F, F, F) in maps
    for m in maps:
        for n in maps:
            if m != n:
                assert any(m(v) != n(v) for v in F)


def test_gluing_map_rejects_non_bijection():
    with pytest.raises(SurgeryError):
        GluingMap(F, F, ("a", "a", 1))


def test_gluing_map_inverse_and_relabel():
    m = GluingMap(F, F, (2, "a", 1))
    assert m.inverse()(m("a")) == "a"
    r = m.relabelled((1, 2, "a"))
    assert all(r(v) == m(v) for v in F)
    assert str(m) == "a:2 1:a 2:1"


# connected sums


@pytest.mark.parametrize("gmap", enumerate_identifications((1, 2, 3), (1, 2, 3)))
def test_k4_sum_is_bp3(gmap):
    k4 = tetrahedron()
    s = connected_sum(k4, (1, 2, 3), k4, (1, 2, 3), gmap)
    assert are_isomorphic(s, bipyramid(3)) is not None


def test_bp3_sum_counts():
    s = connected_sum(bipyramid(3), F, bipyramid(3), F, F)
    assert (len(s.vertices), len(s.edges), len(s.faces)) == (7, 15, 10)
    assert euler_characteristic(s) == 2


def test_sum_naming():
    cs = glue(bipyramid(3), bipyramid(3), GluingMap(F, F, (2, "a", 1)))
    assert cs.right_names == {1: 2, 2: "a", "a": 1, 3: "3'", "b": "b'"}


def test_sum_rejects_unknown_face():
    with pytest.raises(SurgeryError):
        glue(bipyramid(3), bipyramid(3), GluingMap(F, (1, 3, 5), (1, 3, 5)))


def test_sum_map_must_match_faces():
    with pytest.raises(SurgeryError):
        connected_sum(bipyramid(3), F, bipyramid(3), ("b", 1, 2), GluingMap(F, F, F))


# segment decompositions


def test_bp7_segments():
    d = segment_decomposition(bipyramid(7), F)
    a, b, c = (s.vertices for s in d.segments)
    assert a[:3] == (1, 2, "b") and a[-2:] == (1, "a")
    assert b[:2] == ("a", 2) and b[-3:] == ("b", 1, 2)
    assert c[:2] == (2, "a") and c[-2:] == ("a", 1)


def test_bp5_segments():
    d = segment_decomposition(bipyramid(5), F)
    a, b, c = (s.vertices for s in d.segments)
    assert a[:2] == (1, 2) and a[-5:] == (4, 5, "b", 1, 2)
    assert b[:2] == (2, "a") and b[-5:] == (4, "b", 5, 1, "a")
    assert c[:2] == ("a", 2) and c[-2:] == ("a", 1)


def test_bp6_segments_span_two_zigzags():
    d = segment_decomposition(bipyramid(6), F)
    assert [s.zigzag for s in d.segments][:2] == [d.segments[0].zigzag] * 2
    c = d.segment("C").vertices
    assert d.segments[2].zigzag != d.segments[0].zigzag
    assert c[:3] == ("a", 2, 3) and c[-2:] == (1, "a")


def test_segment_lengths_cover_zigzag():
    g = bipyramid(9)
    d = segment_decomposition(g, F)
    # consecutive segments of one zigzag share a vertex
    assert sum(len(s.vertices) - 1 for s in d.segments) == enumerate_zigzags(g).zigzags[0].length


def test_labels_must_match_face():
    with pytest.raises(SurgeryError):
        segment_decomposition(bipyramid(5), F, labels=("a", 1, 3))


# words


def test_letter_and_word_parsing():
    assert Letter.parse("C'^-1") == Letter(1, "C", True)
    w = SegmentWord.parse("A, C'^-1, B")
    assert str(w) == "A, C'^-1, B"
    assert str(w.reversed()) == "B^-1, C', A^-1"


def test_normalization():
    assert normalize_words(["A, B'^-1"]) == normalize_words(["B', A^-1"])
    assert normalize_words(["A, B", "C, A'"]) == normalize_words(["A', C", "B, A"])


@pytest.mark.parametrize("images, words", [
    (F, ["A, C'^-1, B, A', C^-1, B'"]),
    ((1, 2, "a"), ["A, B'^-1", "B, C', C, A'"]),
])
def test_odd_odd_words(images, words):
    assert normalize_words(words_of(bipyramid(3), bipyramid(3), images)) == normalize_words(words)


def test_bp6_pair_word():
    g = bipyramid(6)
    assert normalize_words(words_of(g, g, (2, "a", 1))) == normalize_words([tables.EVEN_BIPYRAMID_WORD])


def test_f1_f2_identity_row():
    (r1, f1), = TABLE_INSTANCES["f1"][:1]
    (r2, f2), = TABLE_INSTANCES["f2"]
    g1, g2 = build(r1), build(r2)
    c1, c2 = classify_face(g1, None, f1), classify_face(g2, None, f2)
    gmap = GluingMap(c1.labels, g2.faces[g2.find_face(f2)], c2.labels)
    pred = predict_sum_zigzags(g1, g2, gmap, c1.labels, c2.labels)
    assert normalize_words(pred.words) == normalize_words(["A, B', C, C', B, A'"])


def test_k4_sum_expands_to_length_18():
    k4 = tetrahedron()
    pred = predict_sum_zigzags(k4, k4, GluingMap((1, 2, 3), (1, 2, 3), (1, 2, 3)))
    assert [z.length for z in pred.zigzags] == [18]


def test_expanded_word_is_a_zigzag():
    g1, g2 = bipyramid(7), bipyramid(5)
    gmap = GluingMap(F, F, (1, "a", 2))
    pred = predict_sum_zigzags(g1, g2, gmap)
    direct = enumerate_zigzags(pred.sum.graph)
    assert pred.canonical == direct.canonical_keys()
    assert sum(z.length for z in pred.zigzags) == 2 * len(pred.sum.graph.edges)
    dec1, dec2 = pred.decompositions
    for w in compose_zigzags(dec1, dec2, gmap):
        z = expand_segment_word(w, dec1, dec2, pred.sum.right_names)
        assert z.canonical_key in direct.canonical_keys()


# table verdicts


def test_tables_have_fifty_rows():
    assert len(tables.TABLE_ROWS) == 50
    assert len(tables.LOOKUP) == len(tables.ROWS)


def test_text_rows_reproduce():
    rows = [r for r in tables.ROWS if r.source == "extra"]
    for row in rows:
        assert check_row(row).ok, row


def test_even_even_a_to_a_has_three_zigzags():
    for images in (F, ("a", 2, 1)):
        pred = predict_sum_zigzags(bipyramid(5), bipyramid(5), GluingMap(F, F, images))
        assert len(pred.zigzags) == len(enumerate_zigzags(pred.sum.graph)) == 3


@pytest.mark.parametrize("images", [m.images for m in enumerate_identifications(("a", 2, 3), ("a", 2, 3))])
def test_f2_f2_never_z_knotted(images):
    g = build(section7_recipe(3, 3))
    c = classify_face(g, None, ("a", 2, 3))
    gmap = GluingMap(("a", 2, 3), g.faces[g.find_face(("a", 2, 3))], images)
    v = predict_z_knotted(c, c, gmap)
    assert not v.z_knotted


@pytest.mark.parametrize("g1, g2, count", [
    (bipyramid(3), bipyramid(3), 2),
    (bipyramid(5), bipyramid(5), 4),
    (bipyramid(5), bipyramid(3), 2),
])
def test_audit_counts(g1, g2, count):
    rep = theorem1_audit(g1, F, g2, ("b", 2, 3))
    assert rep.z_knotted_count == count
    assert rep.disagreements == []


def test_swapped_lookup_agrees_with_direct():
    g1 = build(section7_recipe(3, 3))
    rep = theorem1_audit(bipyramid(5), F, g1, ("a", 2, 3))
    assert rep.disagreements == []
    assert rep.z_knotted_count == 0
    assert all("swapped" in r.table_reason for r in rep.rows)


# random gluings over the corpus

ZK = [n for n in sorted(DEFAULT_RECIPES) if len(enumerate_zigzags(build(DEFAULT_RECIPES[n]))) == 1]


@settings(max_examples=25, deadline=None)
@given(n1=st.sampled_from(ZK), n2=st.sampled_from(ZK), data=st.data())
def test_random_gluing_conservation(n1, n2, data):
    g1, g2 = build(DEFAULT_RECIPES[n1]), build(DEFAULT_RECIPES[n2])
    f1 = data.draw(st.sampled_from(g1.faces))
    f2 = data.draw(st.sampled_from(g2.faces))
    gmap = data.draw(st.sampled_from(enumerate_identifications(f1, f2)))
    try:
        pred = predict_sum_zigzags(g1, g2, gmap)
    except SurgeryError:
        # glued graph would not be a valid embedding
        return
    s = pred.sum.graph
    assert validate_embedding(s).ok
    assert len(s.vertices) == len(g1.vertices) + len(g2.vertices) - 3
    assert len(s.edges) == len(g1.edges) + len(g2.edges) - 3
    assert len(s.faces) == len(g1.faces) + len(g2.faces) - 2
    assert euler_characteristic(s) == euler_characteristic(g1) + euler_characteristic(g2) - 2
    assert pred.canonical == enumerate_zigzags(s).canonical_keys()
    # six segments in total, split among the words
    assert sum(pred.shape()) == 6
    assert pred.shape() in {(6,), (2, 4), (2, 2, 2)}


def test_representative_faces_one_per_kind():
    e = make_entry("BP_7#BP_7", BP7_PAIR)
    reps = representative_faces(e)
    kinds = [e.face_classes[f].kind for f in reps]
    assert len(kinds) == len(set(kinds))
    assert FaceKind.FIRST in kinds


def test_bp5_pair_has_first_type_face():
    classes = classify_faces(build(BP5_PAIR))
    assert classes[build(BP5_PAIR).faces[build(BP5_PAIR).find_face(("b", 4, 5))]].kind is FaceKind.FIRST
    assert Counter(c.kind for c in classes.values())[FaceKind.FIRST] >= 1


def _direct_counts(g1, f1, partners, keep):
    """Number of z-knotted gluings of ``f1`` onto each kept partner face."""
    out = []
    for e in partners:
        for f2, c2 in e.face_classes.items():
            if not keep(c2.kind):
                continue
            n = 0
            for gmap in enumerate_identifications(f1, f2):
                n += len(enumerate_zigzags(glue(g1, e.graph, gmap).graph)) == 1
            out.append(n)
    return out


def test_first_type_face_glues_to_every_face(zk_corpus):
    g = build(BP7_PAIR)
    f1 = g.faces[g.find_face(("b", 1, 2))]
    counts = _direct_counts(g, f1, zk_corpus, lambda k: True)
    assert len(counts) == sum(len(e.graph.faces) for e in zk_corpus)
    assert set(counts) == {6}


def test_second_type_face_never_glues_to_even_or_second(zk_corpus):
    g = build(section7_recipe(3, 3))
    f1 = g.faces[g.find_face(("a", 2, 3))]
    counts = _direct_counts(g, f1, zk_corpus, lambda k: k in (FaceKind.EVEN, FaceKind.SECOND))
    assert counts and set(counts) == {0}
