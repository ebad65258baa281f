"""Quantisations of cluster algebras with exact integer arithmetic.

Decide whether an exchange matrix admits a compatible skew-symmetric matrix,
construct one, parametrise all of them by minor matrices, and mutate quantum
seeds inside a based quantum torus.
"""

from .errors import (
    ClusterQuantError,
    DimensionError,
    IncompatibleError,
    NoQuantisationError,
    NotSkewSymmetrisableError,
    SingularMatrixError,
    TorusMismatchError,
)
from .exchange import (
    ConnectivityGraph,
    ExchangeMatrix,
    SkewSymmetriser,
    connectivity_graph,
    fundamental_skew_symmetriser,
    is_connected_principal,
    mutate_matrix,
)
from .linalg import Matrix, clear_denominators, det_exact, invert_exact, nullspace_exact, rank_exact
from .minors import (
    EnhancedSolution,
    FrameChoice,
    choose_frame,
    enhanced_solution,
    general_solution,
    homogeneous_basis,
    minor_block,
    reduced_index_set,
)
from .pfaffian import (
    dynkin_edges,
    dynkin_exchange,
    dynkin_orientations,
    full_rank_report,
    pairings,
    perfect_matchings,
    pfaffian,
    pfaffian_via_matchings,
    skew_form,
)
from .quantizer import (
    BasisCompletion,
    CompatiblePair,
    build_quantisation,
    check_compatible,
    complete_basis,
    quantisation_space_dim,
)
from .torus import (
    LaurentQ,
    QuantumSeed,
    QuantumTorus,
    QuantumTorusElement,
    check_q_commute,
    commutation_exponent,
    initial_seed,
    mutate_lambda,
    mutate_seed,
    normal_order,
    torus_mul,
)

__version__ = "0.1.0"
