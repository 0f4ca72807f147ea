"""Zigzags of embedded graphs and connected sums of z-knotted triangulations."""

from zknot.classify import (
    EdgeType,
    FaceClass,
    FaceKind,
    classify_face,
    classify_faces,
    edge_type,
    edge_types,
    face_passages,
    is_z_knotted,
    verify_duality,
)
from zknot.embedding import (
    EmbeddedGraph,
    EmbeddingError,
    are_isomorphic,
    build_graph,
    dual_graph,
    euler_characteristic,
    validate_embedding,
)
from zknot.generators import bipyramid, corpus_build, cube, section7_sum, tetrahedron
from zknot.surgery import (
    GluingMap,
    compose_zigzags,
    connected_sum,
    enumerate_identifications,
    expand_segment_word,
    predict_sum_zigzags,
    predict_z_knotted,
    segment_decomposition,
    theorem1_audit,
)
from zknot.zigzag import Zigzag, canonical_form, enumerate_zigzags, trace_zigzag, z_vector_string, zigzag_step

__version__ = "0.1.0"
