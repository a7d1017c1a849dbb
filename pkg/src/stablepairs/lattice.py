"""Exact lattice primitives: characters, one-parameter subgroups, pairings.

Characters live in an ambient free lattice Z^rank.  Quotient conventions
(for the special linear group, Z^(N+1) modulo the all-ones vector) are
expressed by constraint covectors that every admissible one-parameter
subgroup must annihilate; points themselves are never quotiented.  All
arithmetic is exact: integers stay integers, rationals are `Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Scalar = int | Fraction
LatticePoint = tuple[int, ...]
OnePS = tuple[int, ...]
RationalFunctional = tuple[Fraction, ...]


def lattice_point(coords: Iterable[Scalar]) -> LatticePoint:
    """Coerce coordinates to an exact integer tuple.

    Rejects anything non-integral: floats would silently poison the exact
    verdicts downstream.
    """
    out = []
    for c in coords:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integral lattice coordinate {c}")
            c = c.numerator
        elif not isinstance(c, int):
            raise ValueError(f"non-integer lattice coordinate {c!r}")
        out.append(int(c))
    return tuple(out)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """Exact dot product; raises on length mismatch."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def pair(u: Sequence[int], m: Sequence[int]) -> int:
    """Pairing <u, m> between the 1-PS lattice and the character lattice.

    This is the exponent through which the character m sees the
    one-parameter subgroup attached to u.
    """
    return dot(u, m)


def is_admissible(u: Sequence[int], constraints: Iterable[Sequence[int]]) -> bool:
    """True when u annihilates every declared constraint covector."""
    return all(dot(c, u) == 0 for c in constraints)


def require_admissible(u: Sequence[int], constraints: Iterable[Sequence[int]]) -> None:
    if not is_admissible(u, constraints):
        raise ValueError(f"one-parameter subgroup {tuple(u)} violates the constraints")


def clear_denominators(g: Sequence[Scalar]) -> OnePS:
    """Smallest positive multiple of a rational covector that is integral,
    reduced to a primitive integer vector.

    The multiplier is positive, so the direction of g is preserved.
    Raises on the zero functional, which has no primitive representative.
    """
    fr = [Fraction(c) for c in g]
    if all(c == 0 for c in fr):
        raise ValueError("cannot clear denominators of the zero functional")
    mult = 1
    for c in fr:
        mult = lcm(mult, c.denominator)
    ints = [int(c * mult) for c in fr]
    g0 = 0
    for c in ints:
        g0 = gcd(g0, c)
    return tuple(c // g0 for c in ints)


def as_fractions(v: Sequence[Scalar]) -> RationalFunctional:
    return tuple(Fraction(c) for c in v)
