"""Independent exact routes through sympy, used to derive frozen test values.

Nothing here imports regsimplex. Feet are orthogonal projections via
least squares, normals come from nullspaces, and line intersections from
sympy.solve, so agreement with the package is a genuine cross-check.
"""

from fractions import Fraction

import sympy as sp


def to_frac(x):
    x = sp.nsimplify(x)
    return Fraction(int(x.p), int(x.q))


def std_vertices(n):
    return [sp.Matrix([1 if k == i else 0 for k in range(n + 1)]) for i in range(n + 1)]


def project_affine(p, pts):
    """Orthogonal projection of p onto aff(pts)."""
    p0 = pts[0]
    if len(pts) == 1:
        return p0
    m = sp.Matrix.hstack(*[q - p0 for q in pts[1:]])
    coef = (m.T * m).LUsolve(m.T * (p - p0))
    return p0 + m * coef


def well_built_ratio(n, v=0):
    vs = std_vertices(n)
    a = vs[v]
    foot = project_affine(a, vs[:v] + vs[v + 1:])
    # orthocenter as the intersection of two altitudes (n >= 2) or midpoint (n = 1)
    if n == 1:
        o = (vs[0] + vs[1]) / 2
    else:
        w = 1 if v != 1 else 2
        b = vs[w]
        foot_b = project_affine(b, vs[:w] + vs[w + 1:])
        t, s = sp.symbols("t s")
        sol = sp.solve(list(a + t * (foot - a) - b - s * (foot_b - b)), [t, s], dict=True)[0]
        o = a + sol[t] * (foot - a)
    return to_frac(((a - o).dot(a - o)) / ((o - foot).dot(o - foot)))


def dihedral_cosine(n):
    """Cosine from the normals of facets 0 and 1 within the hull."""
    vs = std_vertices(n)
    normals = []
    for omit in (0, 1):
        foot = project_affine(vs[omit], vs[:omit] + vs[omit + 1:])
        normals.append(vs[omit] - foot)
    n0, n1 = normals
    c = -(n0.dot(n1)) / sp.sqrt(n0.dot(n0) * n1.dot(n1))
    return to_frac(sp.simplify(c))


def scene_points(n):
    vs = std_vertices(n + 1)
    a, c = vs[0], vs[-1]
    base = vs[: n + 1]
    b = project_affine(a, base[1:])
    f = project_affine(c, base)
    e = project_affine(a, vs[1:])
    # D: where the altitude from C meets the altitude from A
    t, s = sp.symbols("t s")
    sol = sp.solve(list(c + t * (f - c) - a - s * (e - a)), [t, s], dict=True)[0]
    d = c + sol[t] * (f - c)
    g = b + (b - c) * sp.sqrt((e - b).dot(e - b) / (b - c).dot(b - c))
    sol = sp.solve(list(b + t * (d - b) - e - s * (f - e)), [t, s], dict=True)[0]
    h = b + sol[t] * (d - b)
    pts = dict(A=a, B=b, C=c, D=d, E=e, F=f, G=g, H=h)
    return {k: tuple(to_frac(x) for x in sp.simplify(v)) for k, v in pts.items()}, (sol[t], sol[s])
