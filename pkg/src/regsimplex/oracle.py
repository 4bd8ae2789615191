"""Floating-point dihedral cosine, independent of the exact kernel.

The simplex is rotated by a random orthogonal matrix, then the inward unit
normal of each of two adjacent facets is found inside the affine hull by a
dense Gram solve. The dihedral angle satisfies cos = -<n_i, n_j>.
"""

from __future__ import annotations

import numpy as np


class OracleError(RuntimeError):
    """The linear solves were too ill-conditioned to trust."""


def _inward_normal(verts: np.ndarray, omit: int, max_cond: float) -> np.ndarray:
    facet = np.delete(verts, omit, axis=0)
    p0 = facet[0]
    m = facet[1:] - p0
    r = verts[omit] - p0
    gram = m @ m.T
    if np.linalg.cond(gram) > max_cond:
        raise OracleError(f"Gram matrix ill-conditioned for facet {omit}")
    coef = np.linalg.solve(gram, m @ r)
    normal = r - m.T @ coef
    return normal / np.linalg.norm(normal)


def float_oracle_dihedral(n: int, seed: int = 0, max_cond: float = 1e12) -> float:
    if n < 2:
        raise ValueError("the dimension must be at least 2 for a dihedral angle")
    rng = np.random.default_rng(seed + n)
    q, _ = np.linalg.qr(rng.standard_normal((n + 1, n + 1)))
    verts = np.eye(n + 1) @ q.T
    n0 = _inward_normal(verts, 0, max_cond)
    n1 = _inward_normal(verts, 1, max_cond)
    return float(-np.dot(n0, n1))
