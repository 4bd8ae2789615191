"""Regular simplices in the standard embedding, with exact checks.

The regular n-simplex is realized as the n+1 standard basis points of
(n+1)-space, which keeps every centroid, altitude foot and angle cosine
rational. The orthocenter is computed as the centroid and then certified to
be the common point of the altitudes, per instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .exact import (
    ONE,
    ZERO,
    Vec,
    add,
    basis,
    dot,
    rank,
    scale,
    segment_parameter,
    solve,
    sq_dist,
    sq_norm,
    sub,
    vec,
)


class CertificationError(AssertionError):
    """An exact geometric precondition did not hold."""


@dataclass(frozen=True)
class Simplex:
    dim: int
    vertices: Tuple[Vec, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        if len(self.vertices) != self.dim + 1:
            raise ValueError(f"a {self.dim}-simplex needs {self.dim + 1} vertices")
        amb = {len(v) for v in self.vertices}
        if len(amb) != 1:
            raise ValueError("vertices in different ambient dimensions")

    @property
    def ambient(self) -> int:
        return len(self.vertices[0])

    def edge_sq_lengths(self) -> set:
        return {sq_dist(p, q) for p, q in combinations(self.vertices, 2)}

    def is_regular(self) -> bool:
        return len(self.edge_sq_lengths()) <= 1

    def is_nondegenerate(self) -> bool:
        v0 = self.vertices[0]
        return rank([sub(v, v0) for v in self.vertices[1:]] or [tuple(ZERO for _ in v0)]) == self.dim


def standard_simplex(n: int) -> Simplex:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Simplex(n, tuple(basis(i, n + 1) for i in range(n + 1)))


def centroid(points: Sequence[Vec]) -> Vec:
    if not points:
        raise ValueError("centroid of an empty point set")
    dim = len(points[0])
    acc = [ZERO] * dim
    for p in points:
        if len(p) != dim:
            raise ValueError("points in different ambient dimensions")
        for k, a in enumerate(p):
            if a:
                acc[k] += a
    m = len(points)
    return tuple(a / m for a in acc)


def face(s: Simplex, omit: int) -> Tuple[Vec, ...]:
    """Vertices of the hyperface opposite vertex ``omit``, in order."""
    if not 0 <= omit <= s.dim:
        raise IndexError(f"vertex index {omit} out of range for a {s.dim}-simplex")
    return s.vertices[:omit] + s.vertices[omit + 1:]


def altitude_foot(s: Simplex, v: int) -> Vec:
    if s.dim < 1:
        raise ValueError("a point has no altitudes")
    return centroid(face(s, v))


def barycentric(s: Simplex, p: Vec) -> Optional[Vec]:
    """Barycentric coordinates of ``p``, or None if p is off the affine hull."""
    cols = [v + (ONE,) for v in s.vertices]
    return solve(cols, tuple(p) + (ONE,))


@dataclass(frozen=True)
class AltitudeRecord:
    vertex: int
    foot: Vec
    sq_length: Fraction
    perpendicular: bool
    passes_centroid: bool
    # position of the centroid along vertex -> foot
    centroid_param: Optional[Fraction]


@dataclass(frozen=True)
class AltitudeCheck:
    dim: int
    records: Tuple[AltitudeRecord, ...]
    common_point: Vec
    congruent: bool
    internal: bool

    @property
    def passed(self) -> bool:
        return (
            len(self.records) == self.dim + 1
            and self.congruent
            and self.internal
            and all(r.perpendicular and r.passes_centroid for r in self.records)
        )


def verify_altitude_properties(s: Simplex) -> AltitudeCheck:
    """Check every altitude: foot, perpendicularity, passage through centroid.

    The foot is taken as the centroid of the opposite face; since that point
    lies in the face, orthogonality to the face edges certifies it as the
    true foot of the perpendicular. Failures are reported in the returned
    record, never raised.
    """
    if s.dim < 1:
        raise ValueError("a point has no altitudes")
    o = centroid(s.vertices)
    records = []
    for i, a in enumerate(s.vertices):
        opp = face(s, i)
        foot = altitude_foot(s, i)
        alt = sub(foot, a)
        perp = all(dot(alt, sub(q, opp[0])) == 0 for q in opp[1:])
        t = segment_parameter(o, a, foot)
        records.append(AltitudeRecord(
            vertex=i,
            foot=foot,
            sq_length=sq_norm(alt),
            perpendicular=perp,
            passes_centroid=t is not None and 0 < t < 1,
            centroid_param=t,
        ))
    bary = barycentric(s, o)
    return AltitudeCheck(
        dim=s.dim,
        records=tuple(records),
        common_point=o,
        congruent=len({r.sq_length for r in records}) == 1,
        internal=bary is not None and all(b > 0 for b in bary),
    )


def well_built_ratio(s: Simplex, v: int = 0) -> Fraction:
    """|AO|^2 / |OH|^2 for vertex A, centroid O and altitude foot H.

    The simplex is well-built iff this equals dim**2.
    """
    a = s.vertices[v]
    o = centroid(s.vertices)
    h = altitude_foot(s, v)
    t = segment_parameter(o, a, h)
    if t is None or not 0 < t < 1:
        raise CertificationError(f"centroid not strictly between vertex {v} and its foot")
    return sq_dist(a, o) / sq_dist(o, h)


def _check_symmetric_spokes(u: Vec, w: Vec) -> Fraction:
    uu = sq_norm(u)
    if uu == 0 or uu != sq_norm(w):
        raise CertificationError("spokes are not of equal nonzero length")
    return uu


def simplex_dihedral_cosine(s: Simplex, i: int = 0, j: int = 1) -> Fraction:
    """Cosine of the dihedral angle along the ridge missing vertices i and j."""
    if s.dim < 2:
        raise ValueError("the dimension must be at least 2 for a dihedral angle")
    if i == j:
        raise ValueError("need two distinct vertices")
    ridge = [p for k, p in enumerate(s.vertices) if k not in (i, j)]
    c = centroid(ridge)
    u = sub(s.vertices[i], c)
    w = sub(s.vertices[j], c)
    for q in ridge[1:]:
        e = sub(q, ridge[0])
        if dot(u, e) != 0 or dot(w, e) != 0:
            raise CertificationError("spoke not orthogonal to the ridge")
    uu = _check_symmetric_spokes(u, w)
    return dot(u, w) / uu


def dihedral_cosine(n: int, ridge: Tuple[int, int] = (0, 1)) -> Fraction:
    if n < 2:
        raise ValueError("the dimension must be at least 2 for a dihedral angle")
    return simplex_dihedral_cosine(standard_simplex(n), *ridge)


def simplex_central_cosine(s: Simplex, i: int = 0, j: int = 1) -> Fraction:
    """Cosine of the angle between centroid->vertex i and centroid->vertex j."""
    if s.dim < 2:
        raise ValueError("the dimension must be at least 2")
    if i == j:
        raise ValueError("need two distinct vertices")
    o = centroid(s.vertices)
    u = sub(s.vertices[i], o)
    w = sub(s.vertices[j], o)
    uu = _check_symmetric_spokes(u, w)
    return dot(u, w) / uu


def central_angle_cosine(n: int, pair: Tuple[int, int] = (0, 1)) -> Fraction:
    if n < 2:
        raise ValueError("the dimension must be at least 2")
    return simplex_central_cosine(standard_simplex(n), *pair)


def apply_rational_similarity(s: Simplex, scale_by, perm: Sequence[int], shift: Sequence) -> Simplex:
    """Map each vertex x to ``scale_by * P(x) + shift``.

    ``perm`` is a signed permutation written with 1-based source indices:
    output coordinate k is ``sign(perm[k]) * x[abs(perm[k]) - 1]``.
    """
    c = Fraction(scale_by)
    if c <= 0:
        raise ValueError("scale must be positive")
    d = s.ambient
    if len(perm) != d or sorted(abs(p) for p in perm) != list(range(1, d + 1)):
        raise ValueError(f"malformed signed permutation {list(perm)!r}")
    shift = vec(shift)
    if len(shift) != d:
        raise ValueError("shift has the wrong length")
    out = []
    for x in s.vertices:
        px = tuple(x[p - 1] if p > 0 else -x[-p - 1] for p in perm)
        out.append(add(scale(c, px), shift))
    return Simplex(s.dim, tuple(out))
