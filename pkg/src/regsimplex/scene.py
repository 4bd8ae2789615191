"""The planar cross-section used in the inductive step.

Inside the standard (n+1)-simplex, the base is the n-simplex on e1..e_{n+1}
and the apex is C = e_{n+2}. All eight labeled points lie in one 2-plane:

    A  base vertex e1
    B  foot of the base altitude from A (centroid of e2..e_{n+1})
    C  apex
    D  centroid of the whole (n+1)-simplex
    E  foot of the altitude from A (centroid of the face opposite A)
    F  foot of the altitude from C (centroid of the base)
    G  reflection of E through B, extending CB past B by |EB|
    H  intersection of lines BD and EF
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exact import (
    Vec,
    add,
    basis,
    dot,
    rank_le,
    scale,
    segment_parameter,
    solve,
    sq_dist,
    sq_norm,
    sub,
)
from .simplex import CertificationError, centroid

POINT_NAMES = ("A", "B", "C", "D", "E", "F", "G", "H")


@dataclass(frozen=True)
class ConstructionScene:
    base_dim: int
    A: Vec
    B: Vec
    C: Vec
    D: Vec
    E: Vec
    F: Vec
    G: Vec
    H: Vec
    # orthogonal rational basis of the plane through A, B, C
    plane_basis: Tuple[Vec, Vec]

    @property
    def ambient(self) -> int:
        return self.base_dim + 2

    @property
    def circle_center(self) -> Vec:
        return self.B

    @property
    def circle_sq_radius(self) -> Fraction:
        return sq_dist(self.B, self.G)

    def points(self) -> dict:
        return {name: getattr(self, name) for name in POINT_NAMES}


def _intersect_lines(p0: Vec, p1: Vec, q0: Vec, q1: Vec) -> Tuple[Vec, Fraction, Fraction]:
    """Intersection of lines p0p1 and q0q1 with the parameters on each."""
    sol = solve([sub(p1, p0), sub(q0, q1)], sub(q0, p0))
    if sol is None:
        raise CertificationError("lines do not meet")
    t, s = sol
    x = add(p0, scale(t, sub(p1, p0)))
    if x != add(q0, scale(s, sub(q1, q0))):
        raise CertificationError("lines are parallel or coincide")
    return x, t, s


def build_construction(n: int) -> ConstructionScene:
    if n < 2:
        raise ValueError("the dimension must be at least 2")
    amb = n + 2
    verts = [basis(i, amb) for i in range(amb)]
    a, c = verts[0], verts[-1]
    b = centroid(verts[1:n + 1])
    f = centroid(verts[:n + 1])
    e = centroid(verts[1:])
    d = centroid(verts)
    g = sub(scale(2, b), e)
    h, _, _ = _intersect_lines(b, d, e, f)

    u = sub(a, b)
    w = sub(c, b)
    w = sub(w, scale(dot(w, u) / sq_norm(u), u))

    scene = ConstructionScene(n, a, b, c, d, e, f, g, h, (u, w))
    check_scene_invariants(scene)
    return scene


def check_scene_invariants(scene: ConstructionScene) -> None:
    """Raise CertificationError unless D is on CF, E on CB, and all points coplanar."""
    t = segment_parameter(scene.D, scene.C, scene.F)
    if t is None or not 0 < t < 1:
        raise CertificationError("D is not strictly inside segment CF")
    t = segment_parameter(scene.E, scene.C, scene.B)
    if t is None or not 0 < t < 1:
        raise CertificationError("E is not strictly inside segment CB")
    pts = scene.points()
    if not rank_le([sub(p, scene.B) for p in pts.values()], 2):
        raise CertificationError("construction points are not coplanar")


def line_parameters_of_h(scene: ConstructionScene) -> Tuple[Fraction, Fraction]:
    """Parameters of H on B->D and on E->F."""
    _, t, s = _intersect_lines(scene.B, scene.D, scene.E, scene.F)
    return t, s


def perturb(scene: ConstructionScene, point: str, coord: int, delta) -> ConstructionScene:
    """Copy of the scene with one coordinate (1-based) of one point shifted."""
    if point not in POINT_NAMES:
        raise ValueError(f"unknown point {point!r}")
    p = list(getattr(scene, point))
    if not 1 <= coord <= len(p):
        raise ValueError(f"coordinate {coord} outside 1..{len(p)}")
    p[coord - 1] += Fraction(delta)
    return dataclasses.replace(scene, **{point: tuple(p)})
