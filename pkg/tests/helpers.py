"""Shared test oracles and random-instance generators.

The oracles here are deliberately independent of the package internals:
they carry their own Gaussian elimination and decide containment by
enumerating candidate half-spaces from point subsets, never by LP.  They
are the ground truth the LP-based answers are measured against.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from stablepairs import Pair, PointSet, StabilityProblem, WeightedVector, cross_polytope


# ---------------------------------------------------------------------------
# Self-contained exact linear algebra (kept separate from stablepairs.linalg).

def _o_rref(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        hit = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                hit = i
                break
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _o_nullspace(rows, ncols):
    red, pivots = _o_rref(rows)
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(tuple(vec))
    return basis


def _o_solve(rows, rhs):
    if not rows:
        return () if all(x == 0 for x in rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = _o_rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def _o_in_span(vectors, target):
    if not vectors:
        return all(x == 0 for x in target)
    cols = [[v[i] for v in vectors] for i in range(len(target))]
    return _o_solve(cols, list(target)) is not None


def _o_dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Brute-force half-space oracle for hull containment modulo directions.

def brute_hull_contains(A, B, directions=()):
    """conv(B) subset of conv(A) + span(directions), by half-space enumeration.

    Candidate inward normals come from point subsets of A spanning
    hyperplanes inside the affine hull of A; the affine hull itself is
    checked by exact solves.  Exponential and proudly so: this is the
    small-scale ground truth.
    """
    A = [tuple(p) for p in A]
    B = [tuple(p) for p in B]
    if not B:
        return True
    n = len(A[0])
    funcs = _o_nullspace(list(directions), n)
    if not funcs:
        return True
    PA = [tuple(_o_dot(f, p) for f in funcs) for p in A]
    PB = [tuple(_o_dot(f, p) for f in funcs) for p in B]
    a0 = PA[0]
    offsets = [_sub(p, a0) for p in PA[1:]]
    for b in PB:
        if not _o_in_span(offsets, _sub(b, a0)):
            return False
    # Maximal independent subset of the offsets spans the hull directions.
    basis = []
    for off in offsets:
        if not _o_in_span(basis, off):
            basis.append(off)
    kp = len(basis)
    if kp == 0:
        return True  # A is one point modulo the directions; B matched it above
    cols = [[v[i] for v in basis] for i in range(len(a0))]
    coords_a = [_o_solve(cols, list(_sub(p, a0))) for p in PA]
    coords_b = [_o_solve(cols, list(_sub(b, a0))) for b in PB]
    for subset in itertools.combinations(range(len(coords_a)), kp):
        base = coords_a[subset[0]]
        offs = [_sub(coords_a[s], base) for s in subset[1:]]
        normals = _o_nullspace(offs, kp)
        if len(normals) != 1:
            continue
        h = normals[0]
        vals = [_o_dot(h, p) for p in coords_a]
        v0 = _o_dot(h, base)
        if all(v >= v0 for v in vals):
            pass
        elif all(v <= v0 for v in vals):
            h = tuple(-c for c in h)
            v0 = -v0
        else:
            continue
        if min(_o_dot(h, b) for b in coords_b) < v0:
            return False
    return True


def box_search_degeneration(A, B, directions=(), box=6):
    """Exhaustive integer search for a covector constant on B, larger on A - B."""
    A = [tuple(p) for p in A]
    Bset = {tuple(p) for p in B}
    rest = [p for p in A if p not in Bset]
    n = len(A[0])
    for u in itertools.product(range(-box, box + 1), repeat=n):
        if any(_o_dot(d, u) != 0 for d in directions):
            continue
        values = {_o_dot(u, b) for b in Bset}
        if len(values) != 1:
            continue
        c = values.pop()
        if all(_o_dot(u, a) > c for a in rest):
            return u
    return None


# ---------------------------------------------------------------------------
# Random instances.

ROOT_POOL = [
    (0, 1), (1, 0), (1, 1), (-1, 1), (2, 1), (1, 2), (-1, 2), (-2, 1),
    (3, 1), (1, 3), (3, 2), (-3, 2), (5, 2), (2, 3),
]


def random_problem(rng: random.Random, rank: int) -> StabilityProblem:
    constraints = [(1,) * rank] if rank >= 2 and rng.random() < 0.5 else []
    return StabilityProblem(rank, constraints, cross_polytope(rank))


def random_support(rng: random.Random, rank: int, max_points=8, lo=-5, hi=5):
    npts = rng.randint(1, max_points)
    pts = {tuple(rng.randint(lo, hi) for _ in range(rank)) for _ in range(npts)}
    return PointSet(pts)


def random_magnitudes(rng: random.Random, support: PointSet):
    return {p: Fraction(rng.randint(1, 16), rng.randint(1, 4)) for p in support}


def random_pair(
    rng: random.Random,
    rank: int | None = None,
    max_points=8,
    lo=-5,
    hi=5,
    weighted=False,
) -> Pair:
    if rank is None:
        rank = rng.randint(1, 4)
    problem = random_problem(rng, rank)
    supports = [random_support(rng, rank, max_points, lo, hi) for _ in range(2)]
    if weighted:
        vecs = [WeightedVector(s, random_magnitudes(rng, s)) for s in supports]
    else:
        vecs = [WeightedVector(s) for s in supports]
    return Pair(vecs[0], vecs[1], problem)


def random_binary_form(rng: random.Random, degree: int):
    from stablepairs import BinaryForm

    roots = {}
    left = degree
    while left > 0:
        point = rng.choice(ROOT_POOL)
        mult = rng.randint(1, left)
        roots[point] = roots.get(point, 0) + mult
        left -= mult
    return BinaryForm(roots)
