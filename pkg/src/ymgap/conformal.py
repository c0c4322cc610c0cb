"""Modified Yamabe machinery on the round S^4, radial sector.

The modified scalar curvature is Phi = R - 2 sqrt(6) |W+| - 3 gamma1 |F+|
and the associated operator L = -6 Lap + Phi is conformally covariant in
dimension 4: for g_hat = u^2 g, Phi_hat = u^-3 L u, and the sign of the
first eigenvalue of L is a conformal invariant.

Everything here is rotationally symmetric: functions live on the geodesic
polar angle rho in [0, pi] sampled at cell centers rho_i = (i+1/2)h. The
radial operator -6 (sin^3 rho)^-1 d/drho (sin^3 rho d/drho) + Phi is
discretized in conservative (finite-volume) form with exact per-cell
volumes of sin^3; fluxes vanish at the poles, which encodes the
regularity boundary condition. Constants are annihilated exactly, so
Phi = const reproduces lambda_1 = const to solver precision on any grid.

A ``RadialFunction`` argument means either a vectorized callable of rho or
an array of node values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

SQRT6 = np.sqrt(6.0)
TWO_PI_SQ = 2.0 * np.pi ** 2

ROUND_SCALAR_CURVATURE = 12.0
ROUND_VOLUME = 8.0 * np.pi ** 2 / 3.0
#: Yamabe invariant of the round conformal class: 12 * sqrt(vol) = 8 sqrt(6) pi
YAMABE_S4 = ROUND_SCALAR_CURVATURE * np.sqrt(ROUND_VOLUME)


def round_scalar_curvature():
    """Scalar curvature of the unit round S^4."""
    return 12.0


def cell_grid(n):
    """Cell-center nodes and spacing on [0, pi]."""
    if n < 8:
        raise ValueError("grid too coarse")
    h = np.pi / n
    return (np.arange(n) + 0.5) * h, h


def cell_volumes(n):
    """Exact int sin^3 over each cell, in cancellation-free product form.

    Naive differences of the primitive cos^3/3 - cos lose all digits at
    pole cells once n is a few thousand.
    """
    h = np.pi / n
    faces = np.arange(n + 1) * h
    a, b = faces[:-1], faces[1:]
    mid = 0.5 * (a + b)
    sh = np.sin(0.5 * h)
    bracket = (np.sin(a) ** 2 + np.sin(b) ** 2 + sh ** 2 + np.sin(mid) ** 2) / 3.0
    return 2.0 * np.sin(mid) * sh * bracket


def as_values(u, rho):
    """Sample a RadialFunction: callable of rho, scalar, or node array."""
    if callable(u):
        vals = np.asarray(u(rho), dtype=float)
    else:
        vals = np.asarray(u, dtype=float)
        if vals.ndim == 0:
            vals = np.full_like(rho, float(vals))
    if vals.shape != rho.shape:
        raise ValueError("radial values do not match the grid")
    return vals


def pole_regularity_defect(values, rho):
    """One-sided derivative magnitude at the poles (should be O(h))."""
    h = rho[1] - rho[0]
    return max(abs(values[1] - values[0]) / h, abs(values[-1] - values[-2]) / h)


@dataclass(frozen=True)
class ModifiedScalarField:
    """Phi = scalar_curv - 2 sqrt(6) weyl_norm - 3 gamma1 f_plus_norm on a grid."""

    rho: np.ndarray
    phi: np.ndarray
    scalar_curv: np.ndarray
    weyl_norm: np.ndarray
    f_plus_norm: np.ndarray
    gamma1: float

    def reconstruction_residual(self):
        rebuilt = self.scalar_curv - 2.0 * SQRT6 * self.weyl_norm - 3.0 * self.gamma1 * self.f_plus_norm
        return float(np.max(np.abs(self.phi - rebuilt)))


def phi_of(scalar_curv, weyl_norm, f_plus_norm, gamma1, n=2000):
    """Assemble the modified scalar curvature field on an n-cell grid."""
    if gamma1 < 0:
        raise ValueError("gamma1 must be nonnegative")
    rho, _ = cell_grid(n)
    r = as_values(scalar_curv, rho)
    w = as_values(weyl_norm, rho)
    f = as_values(f_plus_norm, rho)
    phi = r - 2.0 * SQRT6 * w - 3.0 * gamma1 * f
    return ModifiedScalarField(rho, phi, r, w, f, float(gamma1))


@dataclass(frozen=True)
class SLProblem:
    """Discrete -6 Lap + Phi in finite-volume form.

    ``weight`` are cell masses (volume element), ``cond`` face
    conductivities including the 6 (zero at the poles), ``phi`` node
    potential values. The symmetrized operator is tridiagonal and
    symmetric by construction under the weight inner product.
    """

    rho: np.ndarray
    h: float
    weight: np.ndarray
    cond: np.ndarray
    phi: np.ndarray

    def stiffness_times(self, f):
        flux = self.cond[1:-1] * np.diff(f) / self.h
        return np.concatenate([flux, [0.0]]) - np.concatenate([[0.0], flux])

    def apply(self, f):
        """Pointwise (-6 Lap + Phi) f at the nodes."""
        return self.stiffness_times(f) / self.weight + self.phi * f

    def quadratic_form(self, f):
        df = np.diff(f)
        return float(np.sum(self.cond[1:-1] * df * df) / self.h + np.sum(self.phi * f * f * self.weight))

    def mass(self, f):
        return float(np.sum(f * f * self.weight))

    def tridiagonal(self):
        """(diag, offdiag) of the weight-symmetrized operator."""
        d = (self.cond[:-1] + self.cond[1:]) / (self.h * self.weight) + self.phi
        e = -self.cond[1:-1] / (self.h * np.sqrt(self.weight[:-1] * self.weight[1:]))
        return d, e

    def asymmetry(self):
        """Max |<Lf,g>_w - <f,Lg>_w| over a fixed family of test functions,
        normalized by the form magnitude; zero up to roundoff."""
        worst = 0.0
        tests = [np.sin((k + 1) * self.rho) + 0.25 * np.cos(k * self.rho) for k in range(4)]
        for i, f in enumerate(tests):
            for g in tests[i + 1:]:
                lf = np.sum(self.apply(f) * g * self.weight)
                lg = np.sum(f * self.apply(g) * self.weight)
                scale = max(abs(lf), abs(lg), 1.0)
                worst = max(worst, abs(lf - lg) / scale)
        return worst


def round_problem(phi, n=2000):
    """Eigenproblem for -6 Lap + Phi on the unit round S^4."""
    rho, h = cell_grid(n)
    faces = np.arange(n + 1) * h
    s3f = np.sin(faces) ** 3
    s3f[0] = 0.0
    s3f[-1] = 0.0
    return SLProblem(rho, h, cell_volumes(n), 6.0 * s3f, as_values(phi, rho))


def flux_laplacian(u_vals, n):
    """Conservative radial Laplacian on the round S^4 (cell averages)."""
    rho, h = cell_grid(n)
    faces = np.arange(n + 1) * h
    s3f = np.sin(faces) ** 3
    flux = s3f[1:-1] * np.diff(u_vals) / h
    div = np.concatenate([flux, [0.0]]) - np.concatenate([[0.0], flux])
    return div / cell_volumes(n)


def pointwise_laplacian(u_vals, n):
    """u'' + 3 cot(rho) u' by central differences with even reflection at
    the poles; an independent discretization of the same operator."""
    rho, h = cell_grid(n)
    ug = np.concatenate([[u_vals[0]], u_vals, [u_vals[-1]]])
    upp = (ug[2:] - 2.0 * ug[1:-1] + ug[:-2]) / h ** 2
    up = (ug[2:] - ug[:-2]) / (2.0 * h)
    return upp + 3.0 * up / np.tan(rho)


class EigenSolveError(RuntimeError):
    def __init__(self, message, trace):
        super().__init__(f"{message}; iterates: {trace}")
        self.trace = trace


def lambda1(prob, tol=1e-13, max_iter=400):
    """Smallest eigenvalue and positive eigenfunction of the discrete L.

    Shifted inverse iteration on the symmetric tridiagonal form; the shift
    sits below the Gershgorin lower bound, so the factored matrix is
    positive definite and the iteration is deterministic (all-ones start).
    """
    d, e = prob.tridiagonal()
    n = len(d)
    gersh = np.min(d - np.abs(np.concatenate([[0.0], e])) - np.abs(np.concatenate([e, [0.0]])))
    sigma = gersh - 1.0
    ab = np.zeros((3, n))
    ab[0, 1:] = e
    ab[1] = d - sigma
    ab[2, :-1] = e
    v = np.ones(n) / np.sqrt(n)
    lam_prev = np.inf
    trace = []
    for _ in range(max_iter):
        x = solve_banded((1, 1), ab, v)
        v = x / np.linalg.norm(x)
        bv = d * v
        bv[:-1] += e * v[1:]
        bv[1:] += e * v[:-1]
        lam = float(v @ bv)
        trace.append(lam)
        if abs(lam - lam_prev) < tol * max(1.0, abs(lam)):
            break
        lam_prev = lam
    else:
        raise EigenSolveError("inverse iteration did not converge", trace[-10:])
    phi1 = v / np.sqrt(prob.weight)
    if phi1[np.argmax(np.abs(phi1))] < 0:
        phi1 = -phi1
    return lam, phi1 / np.max(np.abs(phi1))


def rayleigh(prob, f):
    """Quadratic-form quotient of the discrete operator; >= lambda1."""
    vals = as_values(f, prob.rho)
    den = prob.mass(vals)
    if den <= 0.0 or not np.isfinite(den):
        raise ValueError("test function has zero norm")
    return prob.quadratic_form(vals) / den


def transform_problem(prob, u):
    """Eigenproblem for the conformally changed metric g_hat = u^2 g.

    u must be a positive callable so it can be sampled at faces as well.
    Conductivities scale by u^2, masses by u^4, and the potential becomes
    Phi_hat = u^-3 (-6 Lap u + Phi u). The sign of lambda1 is preserved.
    """
    if not callable(u):
        raise ValueError("transform_problem needs a callable conformal factor")
    n = len(prob.rho)
    rho, h = cell_grid(n)
    faces = np.arange(n + 1) * h
    un = np.asarray(u(rho), dtype=float)
    uf = np.asarray(u(faces), dtype=float)
    if np.any(un <= 0) or np.any(uf <= 0):
        raise ValueError("conformal factor must be positive")
    phi_hat = (-6.0 * flux_laplacian(un, n) + prob.phi * un) / un ** 3
    s3f = np.sin(faces) ** 3
    s3f[0] = 0.0
    s3f[-1] = 0.0
    return SLProblem(rho, h, cell_volumes(n) * un ** 4, 6.0 * s3f * uf ** 2, phi_hat)


def transformed_phi(u, field):
    """Phi_hat = u^-3 (-6 Lap u + Phi u) on the field's grid (flux path)."""
    n = len(field.rho)
    un = as_values(u, field.rho)
    if np.any(un <= 0):
        raise ValueError("conformal factor must be positive")
    return (-6.0 * flux_laplacian(un, n) + field.phi * un) / un ** 3


def covariance_check(u, field):
    """Max pointwise gap between the two routes to Phi_hat.

    Route (a): u^-3 (-6 Lap u + Phi u) with the conservative Laplacian.
    Route (b): transform each constituent (R_hat = u^-3(-6 Lap u + R u)
    with the pointwise cotangent Laplacian, |W+| and |F+| scaling by
    u^-2) and recombine. Both are O(h^2) discretizations of the same
    identity, so the gap is O(h^2) and sensitive to any factor or sign
    slip in either route.
    """
    n = len(field.rho)
    un = as_values(u, field.rho)
    if np.any(un <= 0):
        raise ValueError("conformal factor must be positive")
    route_a = transformed_phi(un, field)
    r_hat = (-6.0 * pointwise_laplacian(un, n) + field.scalar_curv * un) / un ** 3
    route_b = (r_hat
               - 2.0 * SQRT6 * field.weyl_norm / un ** 2
               - 3.0 * field.gamma1 * field.f_plus_norm / un ** 2)
    return float(np.max(np.abs(route_a - route_b)))


def yamabe_quotient(u, n=20000):
    """int(6|du|^2 + 12 u^2) dV / (int u^4 dV)^(1/2) on the unit round S^4.

    Equals 8 sqrt(6) pi at constants (and along the conformal-factor
    family of round metrics); larger for everything else, up to O(h^2).
    """
    rho, h = cell_grid(n)
    vals = as_values(u, rho)
    if np.any(vals <= 0):
        raise ValueError("conformal factor must be positive")
    faces = np.arange(n + 1) * h
    s3f = np.sin(faces) ** 3
    vol = cell_volumes(n)
    du = np.diff(vals)
    num = TWO_PI_SQ * (6.0 * np.sum(s3f[1:-1] * du * du) / h + 12.0 * np.sum(vals * vals * vol))
    den = np.sqrt(TWO_PI_SQ * np.sum(vals ** 4 * vol))
    return float(num / den)


def dilation_factor(lam):
    """Conformal factor of the pullback of the round metric by x -> lam x.

    u(rho) = lam (1 + t^2) / (1 + lam^2 t^2), t = tan(rho/2); the Yamabe
    quotient is constant (= 8 sqrt(6) pi) along this family.
    """
    if lam <= 0:
        raise ValueError("dilation factor must be positive")

    def u(rho):
        t2 = np.tan(0.5 * np.asarray(rho)) ** 2
        return lam * (1.0 + t2) / (1.0 + lam ** 2 * t2)

    return u


def stereographic_factor(rho):
    """u with g_round = u^2 g_flat under stereographic projection,
    u = 2/(1+|x|^2) = 1 + cos(rho) at |x| = tan(rho/2)."""
    return 1.0 + np.cos(np.asarray(rho))


def phi_to_csv(path, field):
    data = np.column_stack([field.rho, field.phi])
    np.savetxt(path, data, delimiter=',', header='rho,phi', comments='')


def phi_from_csv(path):
    data = np.loadtxt(path, delimiter=',', skiprows=1)
    return data[:, 0], data[:, 1]
