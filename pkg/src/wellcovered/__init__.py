"""Well-coveredness of small graphs and their Cartesian products."""

from .certificates import (
    Certificate,
    FamilySpec,
    build_clique_family,
    family_product_assignment,
    verify_certificate,
    witness_prism_girth5_isolatable,
    witness_product_isolatable_deg2,
    witness_product_leaf,
    witness_product_order3,
)
from .graphio import (
    EnumFilter,
    canonical_form,
    enumerate_connected_graphs,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    INFINITE_GIRTH,
    Graph,
    GirthValue,
    ProductLabeling,
    VertexSet,
    build_graph,
    cartesian_product,
    delete_closed_neighborhood,
    distance,
    girth,
    has_four_cycle,
    induced_subgraph,
    is_connected,
    named_graph,
    prism,
    strong_support_vertices,
)
from .harness import Bounds, VerificationReport, conjecture_search, verify_statement
from .independence import (
    IndependenceSummary,
    enumerate_mis,
    find_unequal_maximal_sets,
    independence_summary,
    is_extendable,
    is_one_well_covered,
    is_well_covered,
    isolatable,
    isolatable_vertices,
    isolating_sets,
    random_maximal_independent_set,
)

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "Certificate",
    "EnumFilter",
    "FamilySpec",
    "Graph",
    "GirthValue",
    "INFINITE_GIRTH",
    "IndependenceSummary",
    "ProductLabeling",
    "VerificationReport",
    "VertexSet",
    "build_clique_family",
    "build_graph",
    "canonical_form",
    "cartesian_product",
    "conjecture_search",
    "delete_closed_neighborhood",
    "distance",
    "enumerate_connected_graphs",
    "enumerate_mis",
    "family_product_assignment",
    "find_unequal_maximal_sets",
    "girth",
    "has_four_cycle",
    "independence_summary",
    "induced_subgraph",
    "is_connected",
    "is_extendable",
    "is_one_well_covered",
    "is_well_covered",
    "isolatable",
    "isolatable_vertices",
    "isolating_sets",
    "named_graph",
    "parse_edge_list",
    "parse_graph6",
    "prism",
    "random_maximal_independent_set",
    "strong_support_vertices",
    "verify_certificate",
    "verify_statement",
    "witness_prism_girth5_isolatable",
    "witness_product_isolatable_deg2",
    "witness_product_leaf",
    "witness_product_order3",
    "write_edge_list",
    "write_graph6",
]
