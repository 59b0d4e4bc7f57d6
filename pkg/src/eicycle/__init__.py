"""Hypergraphs H whose edge intersection hypergraph EI(H) is the cycle C_n."""
from .analysis import (
    SectionDecomposition,
    half_generation_count,
    is_chord,
    section_decomposition,
    section_profile,
)
from .construct import (
    ConstructionOutput,
    GroupSpec,
    construct,
    construct_even,
    construct_odd,
    construct_small,
    group_layout,
    strong_hypercycle3,
)
from .core import (
    CycleOrder,
    Hypergraph,
    cycle_edges,
    degree,
    is_k_uniform,
    is_r_regular,
    normalize_vertex,
)
from .ei import edge_intersection_hypergraph, generation_certificate
from .search import SearchConfig, SearchResult, candidate_edges, min_realization
from .verify import (
    VerificationReport,
    check_theorem2_claims,
    render_certificate,
    verify_cycle_realization,
)

__version__ = "0.1.0"
