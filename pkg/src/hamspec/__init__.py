"""Spectral sufficient conditions for Hamiltonicity, with exact oracles to check them."""

from .certifier import (
    Outcome,
    Verdict,
    best_verdict,
    certify,
    corollary_bounds,
    evaluate_conditions,
    theorem1_condition,
    theorem2_condition,
)
from .errors import (
    BudgetExceededError,
    CorpusTooLargeError,
    EigensolverError,
    Graph6Error,
    HamspecError,
    MalformedCharacterError,
    PaddingError,
    PreconditionError,
    TruncationError,
    UnsupportedSizeError,
)
from .graph import (
    Graph,
    bipartition,
    canonical_mask,
    dedup_isomorphs,
    degree_profile,
    enumerate_labeled,
    recognize_complete_bipartite,
)
from .graph6 import encode_graph6, parse_graph6, read_graph6_file
from .oracles import (
    circumference,
    independence_number,
    invariants,
    is_hamiltonian,
    is_traceable,
    lemma_audit,
    vertex_connectivity,
)
from .rng import SplitMix64, sample_random
from .spectral import (
    SpectralParams,
    build_matrix,
    eigenvalues,
    quadratic_form,
    rayleigh_sandwich,
    row_sum_m_squared,
    spectrum,
)
from .sweep import SweepReport, SweepSpec, parse_source, sweep

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
