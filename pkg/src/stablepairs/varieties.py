"""Degree bookkeeping for the resultant / hyperdiscriminant pair of a
projective variety, and the associated stability data.

For an n-dimensional degree-d subvariety of projective N-space with
average scalar curvature mu, the Cayley-Chow form has degree d(n+1) and
the hyperdiscriminant degree n(n+1)d - d*mu; the normalized pair raises
each to the other's degree, giving a common degree r whose partitions
locate the two irreducible modules.  Computing the actual forms from
defining ideals is out of scope; this module works at the level of degrees
and user-supplied weight data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import Scalar, require_admissible
from .pairs import Pair, StabilityProblem, WeightedVector, weight
from .polytope import min_functional, scale


@dataclass(frozen=True)
class VarietyDatum:
    """Numerical data of an embedded variety: dimension, degree, curvature, ambient."""

    n: int
    d: int
    mu: Fraction
    N: int

    def __init__(self, n: int, d: int, mu: Scalar, N: int):
        mu = Fraction(mu)
        if n < 1:
            raise ValueError("variety dimension must be >= 1")
        if d < 2:
            raise ValueError("variety degree must be >= 2")
        if N <= n:
            raise ValueError("ambient dimension must exceed the variety dimension")
        if n * (n + 1) * d - d * mu <= 0:
            raise ValueError("hyperdiscriminant degree would not be positive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "N", N)


@dataclass(frozen=True)
class DegreeReport:
    deg_resultant: int       # d (n+1)
    deg_hyperdiscriminant: int  # n (n+1) d - d mu
    common_degree: int       # product of the two
    lambda_partition: tuple[int, ...]
    mu_partition: tuple[int, ...]


def plane_curve_mu(d: int, genus: int) -> Fraction:
    """Average scalar curvature of a degree-d curve of the given genus."""
    return Fraction(2 - 2 * genus, d)


def degrees(vd: VarietyDatum, genus: int | None = None) -> DegreeReport:
    """Degree report for the normalized resultant/hyperdiscriminant pair.

    The hyperdiscriminant degree must come out a positive integer, and the
    common degree must be divisible by both n and n+1 (so the partitions
    are genuine); violations flag an inconsistent curvature input.  For
    curves an optional genus cross-checks mu against (2 - 2g) / d.
    """
    n, d, mu, N = vd.n, vd.d, vd.mu, vd.N
    if genus is not None:
        if n != 1:
            raise ValueError("genus validation applies to curves only")
        expected = plane_curve_mu(d, genus)
        if mu != expected:
            raise ValueError(
                f"mu={mu} inconsistent with genus {genus}: expected {expected}"
            )
    delta_frac = n * (n + 1) * d - d * mu
    if delta_frac.denominator != 1:
        raise ValueError(f"hyperdiscriminant degree {delta_frac} is not an integer")
    deg_delta = int(delta_frac)
    if deg_delta <= 0:
        raise ValueError("hyperdiscriminant degree must be positive")
    deg_r = d * (n + 1)
    r = deg_r * deg_delta
    if r % (n + 1) != 0 or r % n != 0:
        raise ValueError(
            f"common degree {r} not divisible by {n} and {n + 1}: inconsistent mu"
        )
    lam = (r // (n + 1),) * (n + 1) + (0,) * (N - n)
    mu_part = (r // n,) * n + (0,) * (N + 1 - n)
    return DegreeReport(deg_r, deg_delta, r, lam, mu_part)


def variety_pair(
    r_data: WeightedVector,
    delta_data: WeightedVector,
    report: DegreeReport,
    problem: StabilityProblem,
) -> Pair:
    """The normalized pair at the weight-data level.

    Raising a vector to a tensor power scales its support, so the v side is
    the resultant support scaled by the hyperdiscriminant degree and the w
    side the other way around.  The result feeds the general (semi)stability
    machinery unchanged.
    """
    v_support = scale(r_data.support, report.deg_hyperdiscriminant)
    w_support = scale(delta_data.support, report.deg_resultant)
    return Pair(WeightedVector(v_support), WeightedVector(w_support), problem)


def mabuchi_weight_inequality(
    r_data: WeightedVector,
    delta_data: WeightedVector,
    report: DegreeReport,
    m: int,
    deg_e: int,
    u: Sequence[int],
    problem: StabilityProblem,
) -> bool:
    """Exact weight form of the coercivity inequality along u.

    With W the normalized hyperdiscriminant power and V the normalized
    resultant power,

        (m+1) (w_u(W) - w_u(V))  <=  deg_e * w_u(identity) - w_u(V),

    where the identity weight is the minimum of u over the reference
    polytope.  Holding for every certificate normal is the same as
    semistability of the matching perturbed pair.
    """
    cons = problem.constraints
    require_admissible(u, cons)
    w_v = report.deg_hyperdiscriminant * weight(u, r_data, cons)
    w_w = report.deg_resultant * weight(u, delta_data, cons)
    w_id = min_functional(problem.q_polytope, u)
    return (m + 1) * (w_w - w_v) <= deg_e * w_id - w_v
