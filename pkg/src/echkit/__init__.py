"""ECH capacities of concave toric domains and of the rotating Kepler problem."""

from ._backend import BACKEND
from .capacity import (
    CapacitySequence,
    Verdict,
    ball_capacity,
    brute_force_union,
    ellipsoid_sequence,
    embed_ellipsoid_check,
    sequence_dominates,
    union_capacities,
)
from .ctd import ConcaveDomain, ctd_capacities, domain_area, order_weights, weight_expansion
from .errors import ConsistencyError, DomainError, EchkitError, ResourceError, UsageError
from .tree import critical_energy, entry_energy, new_tree_slope, sb_value, tangency_mu1

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapacitySequence",
    "ConcaveDomain",
    "ConsistencyError",
    "DomainError",
    "EchkitError",
    "ResourceError",
    "UsageError",
    "Verdict",
    "ball_capacity",
    "brute_force_union",
    "critical_energy",
    "ctd_capacities",
    "domain_area",
    "ellipsoid_sequence",
    "embed_ellipsoid_check",
    "entry_energy",
    "new_tree_slope",
    "order_weights",
    "sb_value",
    "sequence_dominates",
    "tangency_mu1",
    "union_capacities",
    "weight_expansion",
]
