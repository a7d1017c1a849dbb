"""Exact convex geometry over the rationals, in V-representation.

Polytopes are handled as finite generating point sets; membership and
containment questions are decided by exact LP feasibility, optionally
modulo a list of quotient directions (the constraint covectors of the
ambient problem).  Separating functionals come out of the Farkas
certificate of the infeasible containment LP, so every negative answer is
machine-checkable.

Facet enumeration exists only in `certificate_normals`, which walks point
subsets and is meant for the small ranks this package works at.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .lattice import (
    LatticePoint,
    OnePS,
    RationalFunctional,
    Scalar,
    clear_denominators,
    dot,
    lattice_point,
)
from . import linalg
from .linprog import INFEASIBLE, OPTIMAL, feasible_point, solve_lp

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class PointSet:
    """A finite, deduplicated, sorted set of lattice points."""

    points: tuple[LatticePoint, ...]

    def __init__(self, points: Iterable[Sequence[Scalar]] = ()):
        pts = sorted({lattice_point(p) for p in points})
        if pts and any(len(p) != len(pts[0]) for p in pts):
            raise ValueError("points of mixed dimension")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def dim(self) -> int:
        if not self.points:
            raise ValueError("empty point set has no dimension")
        return len(self.points[0])

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points


@dataclass(frozen=True)
class ContainmentContext:
    """Directions to quotient by when testing hull membership.

    For the special linear convention this is the single all-ones vector:
    characters are compared modulo the diagonal.
    """

    mod_directions: tuple[LatticePoint, ...] = ()

    def __init__(self, mod_directions: Iterable[Sequence[Scalar]] = ()):
        dirs = tuple(lattice_point(d) for d in mod_directions)
        if dirs:
            if any(len(d) != len(dirs[0]) for d in dirs):
                raise ValueError("directions of mixed dimension")
            if linalg.matrix_rank(dirs) != len(dirs):
                raise ValueError("quotient directions must be linearly independent")
        object.__setattr__(self, "mod_directions", dirs)


NO_CONTEXT = ContainmentContext()


def _as_pointset(A: PointSet | Iterable[Sequence[Scalar]]) -> PointSet:
    return A if isinstance(A, PointSet) else PointSet(A)


def _check_dims(A: PointSet, x: Sequence[Scalar] | None, ctx: ContainmentContext) -> int:
    dim = A.dim
    if x is not None and len(x) != dim:
        raise ValueError(f"dimension mismatch: point has {len(x)}, set has {dim}")
    for d in ctx.mod_directions:
        if len(d) != dim:
            raise ValueError("quotient direction dimension mismatch")
    return dim


def _containment_lp(A: PointSet, x: Sequence[Scalar], ctx: ContainmentContext):
    """Feasibility LP for x in conv(A) + span(directions).

    Variables: one nonnegative convex weight per point of A, one free
    multiplier per quotient direction.  Rows: the coordinates plus the
    weights-sum-to-one row.
    """
    dim = _check_dims(A, x, ctx)
    pts = A.points
    dirs = ctx.mod_directions
    rows = []
    rhs = []
    for i in range(dim):
        rows.append([Fraction(p[i]) for p in pts] + [Fraction(d[i]) for d in dirs])
        rhs.append(Fraction(x[i]))
    rows.append([_ONE] * len(pts) + [_ZERO] * len(dirs))
    rhs.append(_ONE)
    nonneg = [True] * len(pts) + [False] * len(dirs)
    return feasible_point(rows, rhs, nonneg)


def convex_combination(
    A: PointSet | Iterable[Sequence[Scalar]],
    x: Sequence[Scalar],
    ctx: ContainmentContext = NO_CONTEXT,
) -> tuple[list[Fraction], list[Fraction]] | None:
    """Weights expressing x over conv(A) + span(directions), or None.

    Returns (lambdas aligned with the sorted points of A, direction
    multipliers), with lambdas >= 0 summing to one.
    """
    A = _as_pointset(A)
    if not A.points:
        raise ValueError("empty point set")
    res = _containment_lp(A, x, ctx)
    if res.status != OPTIMAL:
        return None
    k = len(A.points)
    return list(res.x[:k]), list(res.x[k:])


def contains_point(
    A: PointSet | Iterable[Sequence[Scalar]],
    x: Sequence[Scalar],
    ctx: ContainmentContext = NO_CONTEXT,
) -> bool:
    """Exact test for x in conv(A) + span(quotient directions)."""
    return convex_combination(A, x, ctx) is not None


def hull_contains(
    A: PointSet | Iterable[Sequence[Scalar]],
    B: PointSet | Iterable[Sequence[Scalar]],
    ctx: ContainmentContext = NO_CONTEXT,
) -> bool:
    """True when every point of B lies in conv(A) modulo the directions.

    An empty B is vacuously contained; an empty A is an error.
    """
    A = _as_pointset(A)
    B = _as_pointset(B)
    if not B.points:
        return True
    if not A.points:
        raise ValueError("empty container point set")
    if B.dim != A.dim:
        raise ValueError("dimension mismatch between point sets")
    return all(contains_point(A, b, ctx) for b in B)


def separating_functional(
    A: PointSet | Iterable[Sequence[Scalar]],
    x: Sequence[Scalar],
    ctx: ContainmentContext = NO_CONTEXT,
) -> RationalFunctional:
    """A rational g with <g, x> < min over A of <g, a>, vanishing on the
    quotient directions.

    This is the Farkas certificate of the infeasible containment LP.
    Calling it on a contained point is an error.
    """
    A = _as_pointset(A)
    if not A.points:
        raise ValueError("empty point set")
    res = _containment_lp(A, x, ctx)
    if res.status != INFEASIBLE:
        raise ValueError("point is contained; no separating functional exists")
    dim = A.dim
    g = tuple(-y for y in res.farkas[:dim])
    gx = dot(g, [Fraction(c) for c in x])
    if any(dot(g, d) != 0 for d in ctx.mod_directions) or not all(
        gx < dot(g, p) for p in A.points
    ):
        raise RuntimeError("internal: separation certificate failed verification")
    return g


def minkowski_sum(
    A: PointSet | Iterable[Sequence[Scalar]],
    B: PointSet | Iterable[Sequence[Scalar]],
) -> PointSet:
    """Pairwise sumset; generates the Minkowski sum of the hulls."""
    A = _as_pointset(A)
    B = _as_pointset(B)
    if not A.points or not B.points:
        raise ValueError("empty point set")
    if A.dim != B.dim:
        raise ValueError("dimension mismatch between point sets")
    return PointSet(
        tuple(x + y for x, y in zip(a, b)) for a in A.points for b in B.points
    )


def scale(A: PointSet | Iterable[Sequence[Scalar]], m: int) -> PointSet:
    """Pointwise dilation by a positive integer; generates m * conv(A)."""
    if m < 1:
        raise ValueError(f"scale factor must be >= 1, got {m}")
    A = _as_pointset(A)
    return PointSet(tuple(m * c for c in p) for p in A.points)


def min_functional(A: PointSet | Iterable[Sequence[Scalar]], u: Sequence[int]) -> int:
    """Exact minimum of <u, a> over the point set."""
    A = _as_pointset(A)
    if not A.points:
        raise ValueError("empty point set")
    return min(dot(u, p) for p in A.points)


def interior_contains(
    A: PointSet | Iterable[Sequence[Scalar]],
    x: Sequence[Scalar],
    ctx: ContainmentContext = NO_CONTEXT,
) -> bool:
    """Relative-interior membership of x in conv(A) + span(directions).

    Decided by maximizing a common lower bound on the convex weights: x is
    relative-interior exactly when a representation with all weights
    strictly positive exists, i.e. when the optimal slack is positive.
    """
    A = _as_pointset(A)
    if not A.points:
        raise ValueError("empty point set")
    dim = _check_dims(A, x, ctx)
    pts = A.points
    dirs = ctx.mod_directions
    k, nd = len(pts), len(dirs)
    # Variables: lambdas (>=0), direction multipliers (free), slack delta
    # (free), one surplus per point (>=0) encoding lambda_a - delta >= 0.
    nvars = k + nd + 1 + k
    rows = []
    rhs = []
    for i in range(dim):
        row = [Fraction(p[i]) for p in pts] + [Fraction(d[i]) for d in dirs]
        row += [_ZERO] * (1 + k)
        rows.append(row)
        rhs.append(Fraction(x[i]))
    rows.append([_ONE] * k + [_ZERO] * (nd + 1 + k))
    rhs.append(_ONE)
    for a in range(k):
        row = [_ZERO] * nvars
        row[a] = _ONE
        row[k + nd] = Fraction(-1)
        row[k + nd + 1 + a] = Fraction(-1)
        rows.append(row)
        rhs.append(_ZERO)
    objective = [_ZERO] * nvars
    objective[k + nd] = _ONE
    nonneg = [True] * k + [False] * nd + [False] + [True] * k
    res = solve_lp(objective, rows, rhs, nonneg)
    return res.status == OPTIMAL and res.objective > 0


def certificate_normals(
    A: PointSet | Iterable[Sequence[Scalar]],
    ctx: ContainmentContext = NO_CONTEXT,
) -> tuple[OnePS, ...]:
    """A finite set of admissible integer covectors certifying containment.

    For any finite B of matching dimension,

        conv(B) subset of conv(A) + span(directions)
        <=>  min over B of <u, .>  >=  min over A of <u, .>  for every u here.

    The set combines the inward facet normals of the quotient image of
    conv(A) with +/- generators pinning down its affine hull.  Enumerates
    point subsets, so it is exponential in the quotient dimension; fine at
    the ranks this package targets.
    """
    A = _as_pointset(A)
    if not A.points:
        raise ValueError("empty point set")
    dim = _check_dims(A, None, ctx)
    # Functional basis of the covectors annihilating the quotient directions.
    if ctx.mod_directions:
        fbasis = linalg.nullspace(ctx.mod_directions, dim)
    else:
        fbasis = [
            tuple(_ONE if j == i else _ZERO for j in range(dim)) for i in range(dim)
        ]
    k = len(fbasis)
    if k == 0:
        return ()
    phi = [tuple(dot(f, p) for f in fbasis) for p in A.points]
    p0 = phi[0]
    offsets = [tuple(a - b for a, b in zip(q, p0)) for q in phi[1:]]
    wrows, _ = linalg.rref(offsets) if offsets else ([], [])
    kp = len(wrows)

    raw: list[tuple[Fraction, ...]] = []
    # Affine-hull enforcers: functionals constant on the image of A.
    for g in linalg.nullspace(wrows, k):
        raw.append(g)
        raw.append(tuple(-c for c in g))
    # Facet normals within the affine hull, in hull coordinates.
    if kp > 0:
        T = linalg.left_inverse(wrows)  # kp x k, maps hull offsets to coordinates
        psi = [
            tuple(sum(T[r][i] * (q[i] - p0[i]) for i in range(k)) for r in range(kp))
            for q in phi
        ]
        for subset in itertools.combinations(range(len(psi)), kp):
            base = psi[subset[0]]
            offs = [
                tuple(a - b for a, b in zip(psi[s], base)) for s in subset[1:]
            ]
            normals = linalg.nullspace(offs, kp)
            if len(normals) != 1:
                continue  # subset does not span a hyperplane
            h = normals[0]
            vals = [sum(hc * pc for hc, pc in zip(h, q)) for q in psi]
            v0 = sum(hc * pc for hc, pc in zip(h, base))
            if all(v >= v0 for v in vals):
                oriented = h
            elif all(v <= v0 for v in vals):
                oriented = tuple(-c for c in h)
            else:
                continue  # not a supporting hyperplane
            lifted = tuple(
                sum(oriented[r] * T[r][i] for r in range(kp)) for i in range(k)
            )
            raw.append(lifted)

    out: set[OnePS] = set()
    for u_k in raw:
        ambient = [
            sum(u_k[j] * fbasis[j][i] for j in range(k)) for i in range(dim)
        ]
        if any(c != 0 for c in ambient):
            out.add(clear_denominators(ambient))
    return tuple(sorted(out))
