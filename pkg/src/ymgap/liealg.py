"""Skew-symmetric matrix Lie algebras and the sharp bracket constants.

Elements are real skew-symmetric n x n matrices with the inner product
``<A, B> = -tr(AB)/2``, positive definite on skew matrices. Under it the
quaternion generators below satisfy |i|^2 = |j|^2 = |k|^2 = 2.

The two sharp constants computed here are

* ``gamma0``: sup |[A,B]| / (|A||B|) over the algebra, at most sqrt(2),
  with equality on Pauli pairs; exactly 1 on so(3);
* ``gamma1``: sup <omega,[omega,omega]> / |omega|^3 over self-dual
  algebra-valued 2-forms, equal to 4/sqrt(6) for the real su(2) and
  2/sqrt(3) for so(3), and never larger than 4/sqrt(6).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import forms4

GAMMA0_MAX = np.sqrt(2.0)
GAMMA0_SU2 = np.sqrt(2.0)
GAMMA0_SO3 = 1.0
GAMMA1_SU2 = 4.0 / np.sqrt(6.0)
GAMMA1_SO3 = 2.0 / np.sqrt(3.0)
GAMMA1_MAX = 4.0 / np.sqrt(6.0)

# real 4x4 quaternion generators; entries are exact
_O = np.zeros((2, 2))
_I2 = np.eye(2)
_J = np.array([[0.0, 1.0], [-1.0, 0.0]])
SU2_I = np.block([[_O, _I2], [-_I2, _O]])
SU2_J = np.block([[_O, _J], [_J, _O]])
SU2_K = np.block([[_J, _O], [_O, -_J]])
for _m in (SU2_I, SU2_J, SU2_K):
    _m.setflags(write=False)

# sign convention self-test: the toolkit is built on ij = k
if not np.array_equal(SU2_I @ SU2_J, SU2_K):
    raise ImportError("quaternion generator sign convention violated (ij != k)")


def ip_endo(a, b):
    """<A, B> = -tr(AB)/2. Broadcasts over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[-1] != b.shape[-1]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return -0.5 * np.einsum('...ij,...ji->...', a, b)


def norm_endo(a):
    return np.sqrt(ip_endo(a, a))


def bracket(a, b):
    """Matrix commutator ab - ba; skew-symmetric when a, b are."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[-1] != b.shape[-2]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def is_skew(a, tol=1e-14):
    a = np.asarray(a, dtype=float)
    return np.max(np.abs(a + np.swapaxes(a, -1, -2))) <= tol


def pauli_pair(t, s, n=4):
    """The commuting-block pair attaining |[A,B]| = sqrt(2)|A||B|.

    A carries t on two diagonal rotation blocks, B couples the blocks with
    +-s; both are padded with zeros to dimension n. Degenerate t or s
    simply yields a zero matrix.
    """
    if n < 4:
        raise ValueError("pauli pair needs dimension >= 4")
    a = np.zeros((n, n))
    b = np.zeros((n, n))
    a[0, 1], a[1, 0], a[2, 3], a[3, 2] = t, -t, t, -t
    b[0, 2], b[2, 0], b[1, 3], b[3, 1] = -s, s, s, -s
    return a, b


def so3_generators():
    """3x3 rotation generators with [L1, L2] = L3 cyclically and |La| = 1."""
    gens = np.zeros((3, 3, 3))
    for a in range(3):
        for bb in range(3):
            for c in range(3):
                # (L_a)_bc = -eps_abc
                gens[a, bb, c] = -_levi_civita(a, bb, c)
    return gens


def _levi_civita(i, j, k):
    return (i - j) * (j - k) * (k - i) / 2.0


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """A concrete matrix Lie algebra: a name, ambient dimension, and basis.

    The basis (k, n, n) must consist of skew matrices, be linearly
    independent, and close under the bracket; this is checked at
    construction. The constants gamma0/gamma1 depend on the embedding, not
    just the abstract algebra, so specs built by different factories are
    not interchangeable.
    """

    name: str
    n: int
    basis: np.ndarray
    _onb: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=float)
        object.__setattr__(self, 'basis', basis)
        if basis.ndim != 3 or basis.shape[1:] != (self.n, self.n):
            raise ValueError(f"basis shape {basis.shape} does not match n={self.n}")
        if not is_skew(basis):
            raise ValueError("basis contains a non-skew matrix")
        gram = np.array([[ip_endo(x, y) for y in basis] for x in basis])
        if np.linalg.matrix_rank(gram, tol=1e-10) < len(basis):
            raise ValueError("basis is linearly dependent")
        # orthonormalize (the built-in bases are already orthogonal)
        chol = np.linalg.cholesky(gram)
        onb = np.einsum('pk,kij->pij', np.linalg.inv(chol), basis)
        object.__setattr__(self, '_onb', onb)
        self._check_closure()

    def _check_closure(self, tol=1e-12):
        for x in self.basis:
            for y in self.basis:
                c = bracket(x, y)
                if norm_endo(c - self.project(c)) > tol:
                    raise ValueError(f"{self.name}: bracket leaves the basis span")

    @property
    def dim(self):
        return len(self.basis)

    @property
    def orthonormal_basis(self):
        return self._onb

    def element(self, coeffs):
        """Linear combination of the orthonormal basis."""
        return np.einsum('...k,kij->...ij', np.asarray(coeffs, dtype=float), self._onb)

    def coeffs_of(self, m):
        """Orthonormal-basis coefficients of m (assumed in the span)."""
        return np.array([ip_endo(m, e) for e in self._onb])

    def project(self, m):
        return self.element(self.coeffs_of(m))

    @classmethod
    def su2_real(cls):
        """span{i, j, k} as real 4x4 matrices."""
        return cls('su2_real', 4, np.stack([SU2_I, SU2_J, SU2_K]))

    @classmethod
    def so3_block(cls, n=4):
        """so(3) as 3x3 rotation generators padded to dimension n."""
        gens3 = so3_generators()
        gens = np.zeros((3, n, n))
        gens[:, :3, :3] = gens3
        return cls('so3_block', n, gens)

    @classmethod
    def so_n(cls, n):
        """Full so(n) with basis E_ab - E_ba, a < b."""
        basis = []
        for a in range(n):
            for b in range(a + 1, n):
                m = np.zeros((n, n))
                m[a, b] = 1.0
                m[b, a] = -1.0
                basis.append(m)
        return cls(f'so({n})', n, np.stack(basis))


def algebra_by_name(name, n=4):
    key = name.lower().replace('_', '').replace('-', '')
    if key in ('su2', 'su2real', 'su(2)'):
        return AlgebraSpec.su2_real()
    if key in ('so3', 'so3block', 'so(3)'):
        return AlgebraSpec.so3_block(n)
    if key in ('so4', 'so(4)'):
        return AlgebraSpec.so_n(4)
    raise ValueError(f"unknown algebra {name!r} (su2, so3, so4)")


# -- Lie-algebra-valued 2-forms ---------------------------------------------
# stored as (..., 6, n, n): six form components (shared index order), each a
# skew matrix. Combined norm |P|^2 = 2 sum_{i<j} |P_ij|^2.

def lv_inner(p, q):
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return -np.einsum('...cij,...cji->...', p, q)


def lv_norm_sq(p):
    return lv_inner(p, p)


def lv_norm(p):
    return np.sqrt(lv_norm_sq(p))


def lv_hodge(p):
    return np.einsum('ab,...bij->...aij', forms4.STAR, np.asarray(p, dtype=float))


def lv_sd_project(p):
    p = np.asarray(p, dtype=float)
    sp = lv_hodge(p)
    return 0.5 * (p + sp), 0.5 * (p - sp)


def lv_from_sd_coeffs(coeffs, basis=None):
    """Assemble sum_a e_a (x) coeffs[a] from (..., 3, n, n) coefficients."""
    e = forms4.sd_basis() if basis is None else np.asarray(basis, dtype=float)
    return np.einsum('ac,...aij->...cij', e, np.asarray(coeffs, dtype=float))


def lv_sd_coeffs(p, basis=None):
    """Coefficients <e_a, .> of a self-dual form (..., 6, n, n) -> (..., 3, n, n)."""
    e = forms4.sd_basis() if basis is None else np.asarray(basis, dtype=float)
    return 2.0 * np.einsum('ac,...cij->...aij', e, np.asarray(p, dtype=float))


def lv_weyl_quad(w, coeffs):
    """<omega, w * omega> for Lie-valued coefficients (3, n, n)."""
    gram = np.array([[ip_endo(x, y) for y in coeffs] for x in coeffs])
    return float(np.sum(np.asarray(w, dtype=float) * gram))


def _to_full(p):
    p = np.asarray(p, dtype=float)
    n = p.shape[-1]
    full = np.zeros(p.shape[:-3] + (4, 4, n, n))
    for k, (i, j) in enumerate(forms4.PAIRS):
        full[..., i, j, :, :] = p[..., k, :, :]
        full[..., j, i, :, :] = -p[..., k, :, :]
    return full


def _from_full(full):
    return np.stack([full[..., i, j, :, :] for (i, j) in forms4.PAIRS], axis=-3)


def comm2form(p, q):
    """Bracket of Lie-valued 2-forms.

    [P,Q]_ij = sum_k ([P_ik, Q_jk] - [P_jk, Q_ik]); symmetric in (P, Q),
    self-dual output for self-dual inputs. Index contraction is delegated
    to einsum; the explicit four-loop version lives in the test suite as an
    oracle.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape[-1] != q.shape[-1]:
        raise ValueError(f"dimension mismatch: {p.shape} vs {q.shape}")
    pf = _to_full(p)
    qf = _to_full(q)
    t1 = np.einsum('...ikab,...jkbc->...ijac', pf, qf)
    t2 = np.einsum('...jkab,...ikbc->...ijac', qf, pf)
    t3 = np.einsum('...jkab,...ikbc->...ijac', pf, qf)
    t4 = np.einsum('...ikab,...jkbc->...ijac', qf, pf)
    return _from_full(t1 - t2 - t3 + t4)


def cubic_form(p):
    """<P, [P,P]> under the combined inner product."""
    return lv_inner(p, comm2form(p, p))


def bracket_bound_check(p, gamma0):
    """(2/sqrt3) * gamma0 * |p|^2 - |[p,p]|; nonnegative for self-dual p."""
    return (2.0 / np.sqrt(3.0)) * gamma0 * lv_norm_sq(p) - lv_norm(comm2form(p, p))


# -- sharp-constant optimizers ----------------------------------------------

@dataclass
class GammaEstimate:
    """Result of a seeded projected-gradient search.

    ``value`` is a certified local maximum when ``converged`` (projected
    gradient norm below tolerance on the constraint sphere(s)); otherwise
    it is the best value reached. ``argmax`` is an (A, B) pair for gamma0
    and a unit-norm Lie-valued 2-form for gamma1.
    """

    value: float
    argmax: object
    grad_norm: float
    iterations: int
    restart: int
    converged: bool


def _unit(v):
    return v / np.linalg.norm(v)


def gamma0_estimate(alg, restarts=64, tol=1e-7, seed=0, max_iter=400):
    """Maximize |[A,B]| / (|A||B|) by projected gradient ascent on spheres.

    Ambient gradients of |[A,B]|^2 are 2[B,[A,B]] and 2[[A,B],A] (ad-
    invariance of the trace form); both stay in the algebra, so projection
    is only onto the sphere tangent. Deterministic for a fixed seed;
    restarts are reduced by max value with ties going to the earliest.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    onb = alg.orthonormal_basis
    k = alg.dim
    rng = np.random.default_rng(seed)
    best = None
    for r in range(restarts):
        x = _unit(rng.standard_normal(k))
        y = _unit(rng.standard_normal(k))
        step = 0.5
        val = 0.0
        gn = np.inf
        converged = False
        it = 0
        for it in range(max_iter):
            a = alg.element(x)
            b = alg.element(y)
            c = bracket(a, b)
            val = ip_endo(c, c)
            ga = 2.0 * bracket(b, c)
            gb = 2.0 * bracket(c, a)
            gx = np.einsum('ij,kji->k', ga, onb) * -0.5
            gy = np.einsum('ij,kji->k', gb, onb) * -0.5
            pgx = gx - np.dot(gx, x) * x
            pgy = gy - np.dot(gy, y) * y
            gn = np.sqrt(np.dot(pgx, pgx) + np.dot(pgy, pgy)) / (2.0 * np.sqrt(max(val, 1e-30)))
            if gn < tol:
                converged = True
                break
            while step > 1e-16:
                x2 = _unit(x + step * pgx)
                y2 = _unit(y + step * pgy)
                c2 = bracket(alg.element(x2), alg.element(y2))
                if ip_endo(c2, c2) > val:
                    x, y = x2, y2
                    step = min(step * 1.5, 1.0)
                    break
                step *= 0.5
            else:
                break
        converged = converged or gn < tol
        cand = GammaEstimate(float(np.sqrt(max(val, 0.0))), (alg.element(x), alg.element(y)),
                             float(gn), it + 1, r, converged)
        if best is None or cand.value > best.value:
            best = cand
    return best


def gamma1_estimate(alg, restarts=64, tol=1e-7, seed=0, max_iter=800):
    """Maximize <omega,[omega,omega]> / |omega|^3 over self-dual forms.

    omega is parameterized by three orthonormal-basis coefficient vectors
    (one per self-dual basis form) normalized to |omega| = 1 each step; the
    ambient gradient of the cubic form is 3[omega,omega] (the underlying
    trilinear form is fully symmetric).
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    onb = alg.orthonormal_basis
    k = alg.dim
    rng = np.random.default_rng(seed)

    def omega_of(z):
        return lv_from_sd_coeffs(np.einsum('ak,kij->aij', z, onb))

    def value_of(z):
        om = omega_of(z)
        return lv_inner(om, comm2form(om, om))

    best = None
    for r in range(restarts):
        z = rng.standard_normal((3, k))
        z /= np.linalg.norm(z)
        if value_of(z) < 0.0:
            z = -z
        step = 0.5
        val = 0.0
        gn = np.inf
        converged = False
        it = 0
        for it in range(max_iter):
            om = omega_of(z)
            bra = comm2form(om, om)
            val = lv_inner(om, bra)
            bsd = lv_sd_coeffs(bra)
            g = 3.0 * np.einsum('aij,kji->ak', bsd, onb) * -0.5
            pg = g - np.sum(g * z) * z
            gn = float(np.linalg.norm(pg))
            if gn < tol * max(1.0, abs(val)):
                converged = True
                break
            while step > 1e-16:
                z2 = z + step * pg
                z2 /= np.linalg.norm(z2)
                if value_of(z2) > val:
                    z = z2
                    step = min(step * 1.5, 1.0)
                    break
                step *= 0.5
            else:
                break
        converged = converged or gn < tol * max(1.0, abs(val))
        cand = GammaEstimate(float(val), omega_of(z), float(gn), it + 1, r, converged)
        if best is None or cand.value > best.value:
            best = cand
    return best
