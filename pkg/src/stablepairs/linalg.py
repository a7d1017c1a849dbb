"""Small dense exact linear algebra over the rationals.

Everything here operates on lists of `Fraction` rows and is sized for the
lattice ranks this package sees (single digits), not for bulk numerics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]
Rows = list[list[Fraction]]


def _to_rows(rows: Sequence[Sequence]) -> Rows:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Rows, list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows and the pivot column indices.
    """
    m = _to_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def matrix_rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vec]:
    """Basis of {x : A x = 0} for A given by `rows` with `ncols` columns.

    An empty list of rows means the whole space; the basis is then the
    standard one.
    """
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(tuple(vec))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Vec | None:
    """A particular solution of A x = b, or None when inconsistent.

    Free variables are set to zero.
    """
    m = _to_rows(rows)
    b = [Fraction(x) for x in rhs]
    if len(m) != len(b):
        raise ValueError("row/rhs length mismatch")
    if not m:
        return ()
    ncols = len(m[0])
    aug = [row + [bi] for row, bi in zip(m, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """True when `target` is a rational linear combination of `vectors`."""
    vecs = _to_rows(vectors)
    t = [Fraction(x) for x in target]
    if not vecs:
        return all(c == 0 for c in t)
    cols = [[vecs[j][i] for j in range(len(vecs))] for i in range(len(t))]
    return solve(cols, t) is not None


def left_inverse(columns: Sequence[Sequence]) -> Rows:
    """Left inverse T of the matrix B whose columns are given: T B = I.

    Requires the columns to be linearly independent.  Computed through the
    normal equations, which stay exact over the rationals.
    """
    cols = _to_rows(columns)
    k = len(cols[0]) if cols else 0
    kp = len(cols)
    gram = [[sum(cols[i][t] * cols[j][t] for t in range(k)) for j in range(kp)]
            for i in range(kp)]
    # Solve gram * T = B^T column by column of B^T (i.e. per ambient coordinate).
    T: Rows = [[Fraction(0)] * k for _ in range(kp)]
    for t in range(k):
        rhs = [cols[i][t] for i in range(kp)]
        sol = solve(gram, rhs)
        if sol is None:
            raise ValueError("columns are linearly dependent")
        for i in range(kp):
            T[i][t] = sol[i]
    return T
