"""Clique counts, surgeries and bounds for triangulations of closed surfaces."""

from .cliques import CliqueReport, clique_number, clique_report, count_cliques, excess
from .embed import (
    Embedding,
    EmbeddingError,
    FaceHandle,
    ParseError,
    Surface,
    euler_characteristic,
    faces,
    format_embedding,
    is_orientable,
    parse_embedding,
    parse_numeric,
    read_embedding,
    serialize_embedding,
    serialize_numeric,
    surface_of,
)
from .fixtures import ExtremalCatalog, Fixture, all_fixtures, catalog, derived_fixtures, get_fixture, published_fixtures
from .surfmath import (
    BoundReport,
    bound_report,
    clique_upper_bound,
    complete_graph_genus,
    complete_triangulates,
    irreducible_order_bound,
    min_degree_cap,
    minimal_triangulation_order,
    omega_of,
    s_value,
    theorem_lower_bound,
)
from .surgery import (
    ReducibleEdge,
    SurgeryError,
    contract,
    embeddings_isomorphic,
    generate_extremal,
    is_irreducible,
    isomorphic,
    reduce_to_irreducible,
    reducible_edges,
    split_face,
)
from .verify import VerificationReport, verify_table

__version__ = "0.1.0"
