"""Exact checks for exchangeability and two-color exchangeability of finite laws."""

from .check import (
    VerificationReport,
    Witness,
    is_exchangeable,
    is_exchangeable_oracle,
    is_two_color_exchangeable,
    orbit_key,
)
from .constructions import (
    OmegaIndex,
    Which,
    general_counterexample,
    omega_family,
    pair_counterexample,
)
from .dist import (
    Alphabet,
    Coloring,
    DistributionError,
    JointDistribution,
    make_distribution,
    nontrivial_colorings,
    pushforward,
    symmetrize,
)
from .linalg import RationalMatrix, format_rational, nullspace_basis, parse_rational, rank, rational
from .search import (
    ConstraintSystem,
    SupportSpec,
    exchangeability_constraints,
    find_gap_witness,
    full_support,
    gap_dimensions,
    omega_support,
    two_color_constraints,
)

__all__ = [name for name in dir() if not name.startswith("_")]
