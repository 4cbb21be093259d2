"""Planar/toroidal decompositions of K12: rotation systems, genus search,
sphere triangulation generation and the search pipeline around them."""
from .embedding import (
    Embedding,
    FaceSet,
    canonical_code,
    count_triangular_faces,
    genus,
    is_triangulation,
    reflect,
    trace_faces,
)
from .filters import FilterReport, run_filters
from .formats import (
    parse_embedding_text,
    parse_planar_code,
    parse_surftri_line,
    write_embedding_text,
    write_planar_code,
    write_surftri_line,
)
from .genus_search import EmbedOutcome, embed_in_genus, embed_with_removals, embeddings_up_to_equivalence, min_genus
from .graph import Graph, complement, count_triangles, degree_sequence, goodman_total, make_graph
from .triangulations import expand, generate

__version__ = "0.1.0"
