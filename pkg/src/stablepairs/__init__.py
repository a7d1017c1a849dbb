"""Exact (semi)stability of pairs of vectors in rational torus representations.

Decisions run on exact rational arithmetic: weight-polytope containment by
LP feasibility, destabilizing one-parameter subgroups from Farkas
certificates, relative-invariant monomials from convex combinations.  The
energy module is the single floating-point consumer of the weighted data.
"""

from .lattice import (
    LatticePoint,
    OnePS,
    RationalFunctional,
    clear_denominators,
    dot,
    is_admissible,
    pair,
)
from .polytope import (
    ContainmentContext,
    NO_CONTEXT,
    PointSet,
    certificate_normals,
    contains_point,
    convex_combination,
    hull_contains,
    interior_contains,
    min_functional,
    minkowski_sum,
    scale,
    separating_functional,
)
from .pairs import (
    Pair,
    StabilityProblem,
    StableVerdict,
    Verdict,
    WeightedVector,
    check_relative_invariant,
    cross_polytope,
    degree_of,
    futaki_gen,
    perturb,
    relative_invariant,
    stable,
    t_semistable,
    weight,
)
from .limits import extension_criterion, find_degeneration, limit_support
from .futaki import (
    StabilizerSubtorus,
    affine_span_test,
    futaki_classical,
    stabilizer_subtorus,
)
from .energy import (
    TorusElement,
    asymptotic_slope,
    energy_along,
    energy_at,
    infimum_estimate,
    kempf_ness_distance,
    properness_slope_check,
)
from .binary_forms import (
    BinaryForm,
    FormPairVerdict,
    impossible_degree_check,
    mobius_act,
    semistable_bf,
    torus_oracle_bf,
)
from .varieties import (
    DegreeReport,
    VarietyDatum,
    degrees,
    mabuchi_weight_inequality,
    plane_curve_mu,
    variety_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "ContainmentContext",
    "DegreeReport",
    "FormPairVerdict",
    "LatticePoint",
    "NO_CONTEXT",
    "OnePS",
    "Pair",
    "PointSet",
    "RationalFunctional",
    "StabilityProblem",
    "StabilizerSubtorus",
    "StableVerdict",
    "TorusElement",
    "VarietyDatum",
    "Verdict",
    "WeightedVector",
    "affine_span_test",
    "asymptotic_slope",
    "certificate_normals",
    "check_relative_invariant",
    "clear_denominators",
    "contains_point",
    "convex_combination",
    "cross_polytope",
    "degree_of",
    "degrees",
    "dot",
    "energy_along",
    "energy_at",
    "extension_criterion",
    "find_degeneration",
    "futaki_classical",
    "futaki_gen",
    "hull_contains",
    "impossible_degree_check",
    "infimum_estimate",
    "interior_contains",
    "is_admissible",
    "kempf_ness_distance",
    "limit_support",
    "mabuchi_weight_inequality",
    "min_functional",
    "minkowski_sum",
    "mobius_act",
    "pair",
    "perturb",
    "plane_curve_mu",
    "properness_slope_check",
    "relative_invariant",
    "scale",
    "semistable_bf",
    "separating_functional",
    "stabilizer_subtorus",
    "stable",
    "t_semistable",
    "torus_oracle_bf",
    "variety_pair",
    "weight",
]
