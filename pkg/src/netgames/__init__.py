"""Linear best-response network games, Bonacich centrality and Perron-Frobenius limits."""

from .centrality import CentralityQuery, bonacich, truncated_series, verify_recursion
from .coordination import (
    CoordinationSpec,
    consensus_limit,
    consensus_weights,
    coordination_equilibrium,
    influence_weights,
)
from .errors import (
    BudgetExceeded,
    DuplicateEdge,
    IndexOutOfRange,
    InvalidSpec,
    LabelMismatch,
    NegativeWeight,
    NetGamesError,
    NoConvergence,
    NonContraction,
    NotIrreducible,
    ParseError,
)
from .game import EquilibriumResult, GameSpec, best_response, blow_up_scan, equilibrium, keyness
from .matrix import Walk, WeightMatrix, build_matrix, enumerate_walks, is_irreducible, matrix_power, walk_sum
from .spectral import (
    PerronPair,
    is_primitive,
    perron_pair,
    power_ratio,
    rank1_limit,
    scaled_resolvent,
    spectral_radius,
)

__version__ = "0.1.0"
