"""Exact rational scalars and vectors.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator). Points and vectors are plain tuples of Fractions. Lengths are
compared through their squares and angles through :class:`CosineWitness`,
so no radicals or tolerances ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

Vec = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


class DegenerateAngleError(ValueError):
    """An angle was requested against a zero vector."""


def vec(coords: Iterable) -> Vec:
    """Coerce ints, strings or Fractions into an exact vector."""
    return tuple(Fraction(c) for c in coords)


def basis(i: int, dim: int) -> Vec:
    if not 0 <= i < dim:
        raise IndexError(f"basis index {i} outside dimension {dim}")
    return tuple(ONE if k == i else ZERO for k in range(dim))


def _check(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")


def add(u: Vec, v: Vec) -> Vec:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    _check(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def dot(u: Vec, v: Vec) -> Fraction:
    _check(u, v)
    return sum((a * b for a, b in zip(u, v)), ZERO)


def sq_norm(u: Vec) -> Fraction:
    return dot(u, u)


def sq_dist(p: Vec, q: Vec) -> Fraction:
    return sq_norm(sub(p, q))


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class CosineWitness:
    """Exact fingerprint of an angle in [0, 180] degrees.

    ``cos_sq`` is the squared cosine and ``sign`` the sign of the cosine
    (-1, 0 or +1). Two angles are congruent iff their witnesses are equal.
    """

    cos_sq: Fraction
    sign: int

    def __post_init__(self):
        if not 0 <= self.cos_sq <= 1:
            raise ValueError(f"cos_sq out of range: {self.cos_sq}")
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"bad sign {self.sign}")
        if (self.sign == 0) != (self.cos_sq == 0):
            raise ValueError("sign is zero iff cos_sq is zero")

    def signed_cos_sq(self) -> Fraction:
        return self.sign * self.cos_sq


def cosine_witness(u: Vec, v: Vec) -> CosineWitness:
    uu, vv = sq_norm(u), sq_norm(v)
    if uu == 0 or vv == 0:
        raise DegenerateAngleError("angle against a zero vector")
    uv = dot(u, v)
    sign = (uv > 0) - (uv < 0)
    return CosineWitness(uv * uv / (uu * vv), sign)


def angle_witness(vertex: Vec, p: Vec, q: Vec) -> CosineWitness:
    """Witness of the angle p-vertex-q."""
    return cosine_witness(sub(p, vertex), sub(q, vertex))


def _row_echelon(rows: Sequence[Vec]) -> list[list[Fraction]]:
    m = [list(r) for r in rows]
    if not m:
        return m
    ncols = len(m[0])
    for r in m:
        if len(r) != ncols:
            raise DimensionError("ragged vector list")
    pivot_row = 0
    for col in range(ncols):
        # first nonzero entry is the pivot; no strategy is needed over Q
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                break
        else:
            continue
        m[pivot_row], m[r] = m[r], m[pivot_row]
        p = m[pivot_row][col]
        for r in range(pivot_row + 1, len(m)):
            f = m[r][col]
            if f:
                f /= p
                row, prow = m[r], m[pivot_row]
                for c in range(col, ncols):
                    row[c] -= f * prow[c]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m


def rank(vectors: Sequence[Vec]) -> int:
    """Dimension of the linear span, by exact Gaussian elimination."""
    return sum(1 for r in _row_echelon(vectors) if any(r))


def rank_le(vectors: Sequence[Vec], k: int) -> bool:
    if not vectors:
        raise ValueError("rank_le needs at least one vector")
    return rank(vectors) <= k


def solve(columns: Sequence[Vec], rhs: Vec) -> Optional[Vec]:
    """Coefficients ``x`` with ``sum(x[i] * columns[i]) == rhs``.

    Returns None when the system is inconsistent. For an underdetermined
    system the free coefficients are set to zero.
    """
    if not columns:
        raise ValueError("no columns")
    rows = len(rhs)
    for c in columns:
        _check(c, rhs)
    aug = [tuple(c[r] for c in columns) + (rhs[r],) for r in range(rows)]
    ech = _row_echelon(aug)
    ncols = len(columns)
    x = [ZERO] * ncols
    pivots = []
    for row in ech:
        lead = next((i for i, a in enumerate(row) if a != 0), None)
        if lead is None:
            continue
        if lead == ncols:
            return None
        pivots.append((lead, row))
    for lead, row in reversed(pivots):
        acc = row[ncols] - sum((row[j] * x[j] for j in range(lead + 1, ncols)), ZERO)
        x[lead] = acc / row[lead]
    return tuple(x)


def segment_parameter(p: Vec, a: Vec, b: Vec) -> Optional[Fraction]:
    """The ``t`` with ``p == a + t (b - a)``, or None if p is off the line ab."""
    d = sub(b, a)
    dd = sq_norm(d)
    if dd == 0:
        raise DegenerateAngleError("degenerate segment")
    t = dot(sub(p, a), d) / dd
    if add(a, scale(t, d)) != tuple(p):
        return None
    return t


def collinear(*points: Vec) -> bool:
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    return rank_le(diffs, 1) if diffs else True
