"""Signless Laplacian and adjacency spectral radii of k-degenerate graphs."""

from .bounds import (
    BoundReport,
    EqualityCertificate,
    FormulaDomainError,
    bound_cor1,
    bound_cor2,
    bound_llt,
    bound_lipa,
    bound_main,
    bound_report,
    bound_thm_a_mu,
    closed_mu_snk,
    closed_q_snk,
    equality_certificate_cor1,
    equality_certificate_main,
    equality_certificate_thm_a,
    prop1_f,
    prop1_g,
    threshold_reaches_2delta,
)
from .graph import (
    DegeneracyOrdering,
    DegreeProfile,
    Graph,
    GraphError,
    Graph6Error,
    canonical_form,
    complete_to_maximal,
    connected_components,
    decode_graph6,
    degeneracy_ordering,
    degree_profile,
    encode_graph6,
    from_edge_list,
    is_k_degenerate,
    make_snk,
    max_degenerate_edges,
)
from .search import (
    SearchReport,
    enumerate_graphs,
    random_k_degenerate,
    verify_bound_universal,
    verify_edge_bound,
    verify_theorem_mu,
    verify_theorem_q,
)
from .spectral import (
    SpectralResult,
    adjacency,
    largest_eigenvalue,
    m_rowsums,
    mu_index,
    q_index,
    signless_laplacian,
)

__version__ = "0.1.0"
