"""Algebra of 2-forms on oriented Euclidean R^4.

Conventions shared by the whole package:

* a 2-form is stored as its 6 independent components in the fixed index
  order ``(12, 13, 14, 23, 24, 34)`` (component axis last for scalar
  forms);
* the inner product is ``<a, b> = 2 * sum_{i<j} a_ij b_ij``, so the basis
  form dx^12 has squared norm 2;
* the orientation is dx^1 ^ dx^2 ^ dx^3 ^ dx^4, under which
  dx^12 + dx^34, dx^13 - dx^24 and dx^14 + dx^23 span the self-dual space.

An operator on the self-dual space ("Weyl-plus operator") is a symmetric
trace-free 3x3 matrix acting on coefficients in the orthonormal self-dual
basis.  With the Frobenius norm on that matrix, the sharp bound on the
induced quadratic form is 2/sqrt(6) (the extremal ratio for trace-free
symmetric 3x3 matrices); this endomorphism normalization is used
everywhere, see README.
"""

from __future__ import annotations

import numpy as np

#: ordered index pairs of the six components (0-based)
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}

#: Hodge star in the six-component representation: 12<->34, 13<->-24, 14<->23
STAR = np.zeros((6, 6))
STAR[0, 5] = STAR[5, 0] = 1.0
STAR[1, 4] = STAR[4, 1] = -1.0
STAR[2, 3] = STAR[3, 2] = 1.0
STAR.setflags(write=False)

WEYL_BOUND = 2.0 / np.sqrt(6.0)


def basis_form(i, j):
    """Unit-coefficient dx^i ^ dx^j as a six-component array (i, j 0-based)."""
    c = np.zeros(6)
    if i == j:
        raise ValueError("degenerate index pair")
    if i > j:
        i, j = j, i
        sign = -1.0
    else:
        sign = 1.0
    c[PAIR_INDEX[(i, j)]] = sign
    return c


def to_matrix(c):
    """Six-component array(s) (..., 6) -> antisymmetric matrices (..., 4, 4)."""
    c = np.asarray(c, dtype=float)
    m = np.zeros(c.shape[:-1] + (4, 4))
    for k, (i, j) in enumerate(PAIRS):
        m[..., i, j] = c[..., k]
        m[..., j, i] = -c[..., k]
    return m


def from_matrix(m):
    """Antisymmetric matrices (..., 4, 4) -> six-component arrays (..., 6)."""
    m = np.asarray(m, dtype=float)
    return np.stack([m[..., i, j] for (i, j) in PAIRS], axis=-1)


def inner_2form(a, b):
    """<a, b> = 2 sum_{i<j} a_ij b_ij; broadcasts over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return 2.0 * np.sum(a * b, axis=-1)


def norm_2form(a):
    return np.sqrt(inner_2form(a, a))


def hodge_star(a):
    """Apply the Hodge star; linear involution on six-component arrays."""
    return np.asarray(a, dtype=float) @ STAR


def sd_project(a):
    """Split a into (self-dual, anti-self-dual) parts a = plus + minus."""
    a = np.asarray(a, dtype=float)
    sa = hodge_star(a)
    return 0.5 * (a + sa), 0.5 * (a - sa)


def sd_basis():
    """Standard orthonormal basis of the self-dual space, rows e1, e2, e3.

    e1 = (dx^12 + dx^34)/2, e2 = (dx^13 - dx^24)/2, e3 = (dx^14 + dx^23)/2.
    """
    return np.array([
        [0.5, 0.0, 0.0, 0.0, 0.0, 0.5],
        [0.0, 0.5, 0.0, 0.0, -0.5, 0.0],
        [0.0, 0.0, 0.5, 0.5, 0.0, 0.0],
    ])


def random_sd_basis(rng):
    """Random orthonormal basis of the self-dual space (rows).

    Any orthonormal triple is an orthogonal mix of the standard one, so a
    Haar-ish random O(3) factor applied to sd_basis() covers them all.
    """
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    return q @ sd_basis()


def circ(a, b):
    """(a o b)_ij = sum_k (a_ik b_jk - a_jk b_ik), on six-component arrays.

    Bilinear and antisymmetric; maps a pair of orthonormal self-dual basis
    elements to another unit self-dual form (e1 o e2 = e3 etc.).
    """
    am = to_matrix(a)
    bm = to_matrix(b)
    m = am @ np.swapaxes(bm, -1, -2)
    return from_matrix(m - np.swapaxes(m, -1, -2))


# -- operators on the self-dual space ---------------------------------------

def require_weyl(w, tol=1e-12):
    """Validate a symmetric trace-free 3x3 operator; returns it as ndarray."""
    w = np.asarray(w, dtype=float)
    if w.shape != (3, 3):
        raise ValueError(f"expected 3x3 operator, got shape {w.shape}")
    if np.max(np.abs(w - w.T)) > tol:
        raise ValueError("operator is not symmetric")
    if abs(np.trace(w)) > tol:
        raise ValueError("operator is not trace-free")
    return w


def weyl_norm(w):
    """sqrt(sum of squared eigenvalues) = Frobenius norm for symmetric w."""
    w = np.asarray(w, dtype=float)
    return float(np.sqrt(np.sum(w * w)))


def weyl_act(w, coeffs):
    """Apply w to self-dual coefficient triples.

    ``coeffs`` has the coefficient axis first: shape (3,) for scalar forms
    or (3, n, n) for Lie-algebra-valued ones; the action touches only the
    form factor.
    """
    return np.einsum('ab,b...->a...', np.asarray(w, dtype=float), np.asarray(coeffs, dtype=float))


def weyl_quad(w, coeffs):
    """<omega, w * omega> for a scalar coefficient triple (3,)."""
    v = np.asarray(coeffs, dtype=float)
    return float(v @ np.asarray(w, dtype=float) @ v)


def random_weyl(rng, scale=1.0):
    """Random symmetric trace-free 3x3 operator."""
    m = rng.standard_normal((3, 3)) * scale
    m = 0.5 * (m + m.T)
    m -= np.trace(m) / 3.0 * np.eye(3)
    return m


def extremal_weyl(scale=1.0):
    """An operator/coefficient pair attaining |<w,w*w>| = (2/sqrt6)|w||omega|^2.

    Returns (w, coeffs) with w = scale*diag(1, 1, -2) and coeffs aligned
    with the -2 eigenvector, for which <omega, w*omega> = -2*scale|omega|^2
    while |w| = sqrt(6)*scale.
    """
    w = scale * np.diag([1.0, 1.0, -2.0])
    coeffs = np.array([0.0, 0.0, 1.0])
    return w, coeffs
