"""Top-level verification suites and the gap-inequality evaluator.

The central object is the sharp bound

    Y([g]) <= 3 gamma1 ||F+||_L2 + 2 sqrt(6) ||W+||_L2

for a Yang-Mills connection with F+ not identically zero. ``gap_report``
evaluates both sides from a configuration; the standard instanton on the
round S^4 with the su(2) constant gamma1 = 4/sqrt(6) makes it an exact
equality. Suites bundle the module-level checks behind stable ids with
seeded sampling, so a fixed (config, seed) reproduces byte-identical
reports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict

import numpy as np

from . import conformal, forms4, instanton, liealg, quad4

SCHEMA = "ymgap-report/1"

SUITE_IDS = (
    "kato", "bochner", "bracket-sharpness", "weyl-bound", "circ-basis",
    "gamma-constants", "energy", "chern-weil", "eigenvalue", "covariance",
    "yamabe-quotient", "gap",
)


class ConfigError(ValueError):
    """Invalid configuration; maps to CLI exit code 2."""


@dataclass(frozen=True)
class GapConfig:
    group: str = "su2"                      # su2 | so3, or an AlgebraSpec
    gamma1_source: str = "paper"            # paper | estimate
    w_plus_l2: float = 0.0                  # conformally flat default
    yamabe: float = conformal.YAMABE_S4
    scale: float = 1.0
    center: tuple = (0.0, 0.0, 0.0, 0.0)
    connection: str = "instanton"           # instanton | flat
    f_plus_l2_override: float | None = None  # synthetic ||F+|| for what-if runs
    panels: int = 24
    rmax: float = 1000.0
    seed: int = 0
    tol: float = 1e-6                       # relative equality-verdict tolerance

    def __post_init__(self):
        if self.w_plus_l2 < 0:
            raise ConfigError("||W+|| must be nonnegative")
        if self.yamabe <= 0:
            raise ConfigError("the Yamabe invariant input must be positive")
        if self.gamma1_source not in ("paper", "estimate"):
            raise ConfigError("gamma1_source must be 'paper' or 'estimate'")
        if isinstance(self.group, str) and self.group not in ("su2", "so3"):
            raise ConfigError("group must be 'su2', 'so3', or an AlgebraSpec")
        if self.connection not in ("instanton", "flat"):
            raise ConfigError("connection must be 'instanton' or 'flat'")
        if self.f_plus_l2_override is not None and self.f_plus_l2_override < 0:
            raise ConfigError("||F+|| override must be nonnegative")

    def instanton_params(self):
        return instanton.InstantonParams(self.scale, tuple(self.center))

    def grid(self):
        return quad4.RadialGrid.make(rmax=self.rmax, panels=self.panels)

    def to_dict(self):
        d = asdict(self)
        d['group'] = self.group if isinstance(self.group, str) else self.group.name
        d['center'] = list(self.center)
        return d


def gamma1_for(cfg):
    """(gamma1, provenance) for the configured structure group."""
    if cfg.gamma1_source == "paper":
        if not isinstance(cfg.group, str):
            raise ConfigError("custom algebras need gamma1_source='estimate'")
        value = {"su2": liealg.GAMMA1_SU2, "so3": liealg.GAMMA1_SO3}[cfg.group]
        return value, "paper-constant"
    alg = liealg.algebra_by_name(cfg.group) if isinstance(cfg.group, str) else cfg.group
    est = liealg.gamma1_estimate(alg, restarts=32, seed=cfg.seed)
    return est.value, "computed"


@dataclass
class GapReport:
    """Both sides of the gap inequality plus a verdict.

    ``rhs`` is stored exactly as ``3*gamma1*f_plus_l2 + 2*sqrt(6)*w_plus_l2``
    evaluates in floating point, so it is bit-recomputable from the fields.
    Verdicts: ``case-1`` (F+ vanishes), ``equality``, ``inequality-holds``,
    ``strict-gap-violated`` (the configured data cannot come from a
    Yang-Mills connection with F+ != 0).
    """

    yamabe: float
    gamma1: float
    f_plus_l2: float
    w_plus_l2: float
    lhs: float
    rhs: float
    slack: float
    verdict: str
    equality_residual: float | None
    provenance: dict

    def to_dict(self):
        return asdict(self)


def gap_report(cfg):
    """Evaluate the gap inequality for the configured bundle and metric."""
    gamma1, gamma1_prov = gamma1_for(cfg)
    if not 0.0 < gamma1 <= liealg.GAMMA1_MAX + 1e-12:
        raise ConfigError(f"gamma1 = {gamma1} outside (0, 4/sqrt(6)]")
    if cfg.f_plus_l2_override is not None:
        f_plus = cfg.f_plus_l2_override
        f_plus_prov = 'configured'
    elif cfg.connection == "flat":
        f_plus = 0.0
        f_plus_prov = 'computed'
    else:
        f_plus, _ = quad4.l2_sd_norms(cfg.instanton_params(), cfg.grid())
        f_plus_prov = 'computed'
    lhs = cfg.yamabe
    rhs = 3.0 * gamma1 * f_plus + 2.0 * np.sqrt(6.0) * cfg.w_plus_l2
    slack = rhs - lhs

    if f_plus < 1e-10:
        verdict = "case-1"
    elif abs(slack) < cfg.tol * lhs:
        verdict = "equality"
    elif slack > 0:
        verdict = "inequality-holds"
    else:
        verdict = "strict-gap-violated"

    equality_residual = None
    if verdict == "equality" and cfg.w_plus_l2 == 0.0 and cfg.connection == "instanton":
        # pointwise identity R - 3 gamma1 |F+| = 0 for the round representative
        equality_residual = _equality_identity_residual(cfg.instanton_params(), gamma1)

    provenance = {
        'yamabe': 'paper-constant' if cfg.yamabe == conformal.YAMABE_S4 else 'configured',
        'gamma1': gamma1_prov,
        'f_plus_l2': f_plus_prov,
        'w_plus_l2': 'configured',
        'lhs': 'computed',
        'rhs': 'computed',
        'slack': 'computed',
    }
    return GapReport(cfg.yamabe, gamma1, f_plus, cfg.w_plus_l2, lhs, rhs, slack,
                     verdict, equality_residual, provenance)


def _equality_identity_residual(params, gamma1, n_samples=64):
    """Max |R - 3 gamma1 |F+|_round| over sample points, round representative.

    The round-metric pointwise norm is u^-2 |F+|_flat with u = 2/(1+|x|^2)
    composed with the conformal motion taking ``params`` to standard.
    """
    rho = np.linspace(0.05, np.pi - 0.05, n_samples)
    r = np.tan(0.5 * rho)
    x = np.zeros((n_samples, 4))
    x[:, 0] = r
    # pull the sample ray through the conformal motion pairing params with
    # the standard instanton; scale^2 undoes the curvature pullback factor
    xs = params.center_array + params.scale * x
    u = 2.0 / (1.0 + r ** 2)
    f_round = np.sqrt(instanton.curvature_norm_sq(params, xs)) * params.scale ** 2 / u ** 2
    return float(np.max(np.abs(conformal.ROUND_SCALAR_CURVATURE - 3.0 * gamma1 * f_round)))


@dataclass(frozen=True)
class Thresholds:
    general: float
    specialized: float | None
    weak_universal: float


def corollary_thresholds(group, kappa_abs, yamabe, gamma1):
    """Energy thresholds below which a Yang-Mills connection is an instanton.

    general = 16 pi^2 |kappa| + 2 Y^2 / (9 gamma1^2); on the round S^4 the
    specialized values are +32 pi^2 (su2) and +64 pi^2 (so3) beyond the
    16 pi^2 |kappa| floor. The weak universal bound replaces the gamma1
    term by Y^2/12 (they coincide at gamma1 = 4/sqrt(6))."""
    if kappa_abs < 0:
        raise ConfigError("|kappa| must be nonnegative")
    if yamabe <= 0 or gamma1 <= 0:
        raise ConfigError("thresholds need Y > 0 and gamma1 > 0")
    floor = 16.0 * np.pi ** 2 * kappa_abs
    general = floor + 2.0 * yamabe ** 2 / (9.0 * gamma1 ** 2)
    weak = floor + yamabe ** 2 / 12.0
    specialized = None
    if group == "su2":
        specialized = floor + 32.0 * np.pi ** 2
    elif group == "so3":
        specialized = floor + 64.0 * np.pi ** 2
    return Thresholds(general, specialized, weak)


def flow_admissible(energy, rel_tol=1e-9):
    """True iff the energy is strictly below 16 pi^2.

    Energies within rel_tol of the threshold count as at-threshold (not
    admissible): quadrature truncation can land a borderline energy an ulp
    below 16 pi^2. Admissibility implies the associated gradient flow
    exists for all time and converges (flat limit on the round S^4); that
    dynamic statement is reported, not simulated.
    """
    if energy < 0:
        raise ConfigError("energy must be nonnegative")
    return energy < quad4.EPI2_16 * (1.0 - rel_tol)


# -- suites -------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    residual: float
    tolerance: float

    def to_dict(self):
        return asdict(self)


@dataclass
class SuiteResult:
    suite: str
    checks: list
    passed: bool
    runtime: float = field(default=0.0, compare=False)

    def to_dict(self, include_runtime=False):
        d = {'suite': self.suite, 'passed': self.passed,
             'checks': [c.to_dict() for c in self.checks]}
        if include_runtime:
            d['runtime'] = self.runtime
        return d


def _check(name, residual, tolerance):
    residual = float(residual)
    return Check(name, bool(residual <= tolerance), residual, float(tolerance))


def _sample_points(rng, count, radius=2.5, min_radius=0.0):
    x = rng.standard_normal((count, 4))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    r = min_radius + (radius - min_radius) * rng.random(count)
    return x * r[:, None]


def _suite_kato(cfg):
    rng = np.random.default_rng(cfg.seed)
    params = cfg.instanton_params()
    pts = _sample_points(rng, 1000, radius=3.0)
    worst = min(instanton.kato_residual_at(params, x, h=1e-4) for x in pts)
    checks = [_check("kato-floor-1000pts", -worst, 1e-8)]
    for x in pts[:3]:
        r1 = abs(instanton.kato_residual_at(params, x, h=2e-3, richardson=False))
        r2 = abs(instanton.kato_residual_at(params, x, h=1e-3, richardson=False))
        # at least quadratic decay; the floor absorbs points where the h^2
        # error coefficient happens to cross zero
        checks.append(_check("kato-order2", r2 - (r1 / 3.0 + 1e-8), 0.0))
    return checks


def _suite_bochner(cfg):
    rng = np.random.default_rng(cfg.seed + 1)
    params = cfg.instanton_params()
    checks = []
    pts = _sample_points(rng, 10, radius=2.0, min_radius=0.2)
    for x in pts:
        r1 = abs(instanton.bochner_residual_at(params, x, h=2e-3, richardson=False))
        r2 = abs(instanton.bochner_residual_at(params, x, h=1e-3, richardson=False))
        checks.append(_check("bochner-order2", r2 - (r1 / 3.0 + 1e-8), 0.0))
    origin = np.zeros(4)
    lap_term = 0.5 * float(instanton.curvature_norm_sq_laplacian(instanton.STANDARD, origin))
    f0 = instanton.curvature_closed_at(instanton.STANDARD, origin)
    cubic = float(liealg.lv_inner(f0, liealg.comm2form(f0, f0)))
    checks.append(_check("laplacian-term-at-0", abs(lap_term + 1536.0) / 1536.0, 1e-5))
    checks.append(_check("bracket-term-at-0", abs(cubic - 1536.0) / 1536.0, 1e-5))
    checks.append(_check("bochner-residual-default",
                         abs(instanton.bochner_residual_at(params, pts[0], h=1e-3, richardson=True)),
                         1e-6))
    return checks


def _suite_bracket_sharpness(cfg):
    rng = np.random.default_rng(cfg.seed + 2)
    checks = []
    basis = np.stack([liealg.SU2_I, liealg.SU2_J, liealg.SU2_K])
    p = liealg.lv_from_sd_coeffs(basis)
    checks.append(_check("cubic-form-bpst", abs(liealg.cubic_form(p) - 24.0), 1e-12))
    checks.append(_check("bracket-norm-bpst",
                         abs(liealg.lv_norm(liealg.comm2form(p, p)) - 4.0 * np.sqrt(6.0)), 1e-12))
    checks.append(_check("bound-equality-bpst",
                         abs(liealg.bracket_bound_check(p, liealg.GAMMA0_SU2)), 1e-10))
    worst = 0.0
    for _ in range(200):
        coeffs = rng.standard_normal((3, 3))
        q = liealg.lv_from_sd_coeffs(np.einsum('ak,kij->aij', coeffs, basis))
        worst = min(worst, liealg.bracket_bound_check(q, liealg.GAMMA0_SU2))
    checks.append(_check("bound-nonneg-random", -worst, 1e-10))
    params = cfg.instanton_params()
    pts = _sample_points(rng, 50, radius=2.0)
    fp = liealg.lv_sd_project(instanton.curvature_closed_at(params, pts))[0]
    cubic = liealg.lv_inner(fp, liealg.comm2form(fp, fp))
    norms = liealg.lv_norm(fp)
    attain = np.max(np.abs(cubic - liealg.GAMMA1_SU2 * norms ** 3))
    checks.append(_check("pointwise-gamma1-attainment", attain, 1e-10))
    return checks


def _suite_weyl_bound(cfg):
    rng = np.random.default_rng(cfg.seed + 3)
    worst = -np.inf
    for _ in range(10000):
        w = forms4.random_weyl(rng)
        v = rng.standard_normal(3)
        gap = abs(forms4.weyl_quad(w, v)) - forms4.WEYL_BOUND * forms4.weyl_norm(w) * float(v @ v)
        worst = max(worst, gap)
    checks = [_check("weyl-bound-10k", worst, 1e-10)]
    w, v = forms4.extremal_weyl(0.7)
    eq_gap = abs(abs(forms4.weyl_quad(w, v)) - forms4.WEYL_BOUND * forms4.weyl_norm(w) * float(v @ v))
    checks.append(_check("weyl-equality-extremal", eq_gap, 1e-12))
    return checks


def _suite_circ_basis(cfg):
    rng = np.random.default_rng(cfg.seed + 4)
    worst = 0.0
    for _ in range(100):
        basis = forms4.random_sd_basis(rng)
        prods = np.stack([forms4.circ(basis[0], basis[1]),
                          forms4.circ(basis[0], basis[2]),
                          forms4.circ(basis[1], basis[2])])
        gram = 2.0 * prods @ prods.T
        worst = max(worst, float(np.max(np.abs(gram - np.eye(3)))))
    return [_check("circ-orthonormal-100bases", worst, 1e-10)]


def _suite_gamma_constants(cfg):
    checks = []
    su2 = liealg.AlgebraSpec.su2_real()
    so3 = liealg.AlgebraSpec.so3_block()
    t0 = time.perf_counter()
    g0_su2 = liealg.gamma0_estimate(su2, restarts=64, seed=cfg.seed)
    g0_so3 = liealg.gamma0_estimate(so3, restarts=64, seed=cfg.seed)
    g0_time = time.perf_counter() - t0
    checks.append(_check("gamma0-su2", abs(g0_su2.value - liealg.GAMMA0_SU2), 1e-6))
    checks.append(_check("gamma0-so3", abs(g0_so3.value - liealg.GAMMA0_SO3), 1e-6))
    checks.append(_check("gamma0-runtime", g0_time, 5.0))
    g1_su2 = liealg.gamma1_estimate(su2, restarts=32, seed=cfg.seed)
    g1_so3 = liealg.gamma1_estimate(so3, restarts=32, seed=cfg.seed)
    checks.append(_check("gamma1-su2", abs(g1_su2.value - liealg.GAMMA1_SU2), 1e-5))
    checks.append(_check("gamma1-so3", abs(g1_so3.value - liealg.GAMMA1_SO3), 1e-5))
    g1_so4 = liealg.gamma1_estimate(liealg.AlgebraSpec.so_n(4), restarts=16, seed=cfg.seed)
    checks.append(_check("gamma1-so4-bound", g1_so4.value - liealg.GAMMA1_MAX, 1e-5))
    return checks


def _suite_energy(cfg):
    grid = cfg.grid()
    checks = []
    e_std = quad4.ym_energy(instanton.STANDARD, grid)
    checks.append(_check("energy-standard", abs(e_std - quad4.EPI2_16) / quad4.EPI2_16, 1e-8))
    energies = [quad4.ym_energy(instanton.InstantonParams(s), grid)
                for s in (0.25, 0.5, 1.0, 2.0, 4.0)]
    spread = (max(energies) - min(energies)) / quad4.EPI2_16
    checks.append(_check("energy-dilation-invariance", spread, 1e-6))
    rule = quad4.SphereRule.make(24)
    for scale, c1 in ((1.0, 0.6), (0.5, 0.6)):
        e = quad4.ym_energy(instanton.InstantonParams(scale, (c1, 0.0, 0.0, 0.0)),
                            grid, rule=rule, about=(0.0, 0.0, 0.0, 0.0))
        checks.append(_check(f"energy-shift-{scale}", abs(e - quad4.EPI2_16) / quad4.EPI2_16, 1e-6))
    checks.append(_check("energy-flat", abs(quad4.flat_energy(grid)), 1e-14))
    return checks


def _suite_chern_weil(cfg):
    grid = cfg.grid()
    params = cfg.instanton_params()
    kappa = quad4.chern_weil_kappa(params, grid)
    _, minus = quad4.l2_sd_norms(params, grid)
    checks = [
        _check("kappa-bpst", abs(kappa + 1.0), 1e-8),
        _check("asd-part-vanishes", minus, 1e-10),
        _check("kappa-orientation-reversed",
               abs(quad4.chern_weil_kappa(params, grid, reverse_orientation=True) - 1.0), 1e-8),
    ]
    return checks


def _suite_eigenvalue(cfg):
    checks = []
    lam, vec = conformal.lambda1(conformal.round_problem(12.0, n=2000))
    checks.append(_check("lambda1-const-12", abs(lam - 12.0), 1e-8))
    checks.append(_check("eigenfunction-positive", max(0.0, -float(np.min(vec))), 1e-8))
    prob = conformal.round_problem(12.0, n=16000)
    checks.append(_check("rayleigh-cos-36", abs(conformal.rayleigh(prob, np.cos) - 36.0), 1e-6))
    borderline = conformal.phi_of(12.0, 0.0, np.sqrt(6.0), liealg.GAMMA1_SU2, n=2000)
    lam0, _ = conformal.lambda1(conformal.round_problem(borderline.phi, n=2000))
    checks.append(_check("lambda1-borderline", abs(lam0), 1e-6))
    return checks


def _suite_covariance(cfg):
    rng = np.random.default_rng(cfg.seed + 5)
    field = conformal.phi_of(12.0, 0.0, 0.0, liealg.GAMMA1_SU2, n=65536)
    worst = 0.0
    for _ in range(20):
        amps = rng.uniform(-1.0, 1.0, 3)
        amps *= 0.3 / max(np.sum(np.abs(amps)), 1e-9)
        u = 1.0 + sum(a * np.cos((k + 1) * field.rho) for k, a in enumerate(amps))
        worst = max(worst, conformal.covariance_check(u, field))
    return [_check("covariance-20-random", worst, 1e-6)]


def _suite_yamabe(cfg):
    rng = np.random.default_rng(cfg.seed + 6)
    checks = [_check("quotient-at-round",
                     abs(conformal.yamabe_quotient(1.0) - conformal.YAMABE_S4), 1e-8)]
    rho, _ = conformal.cell_grid(20000)
    min_q = np.inf
    for _ in range(50):
        amps = rng.uniform(-1.0, 1.0, 3)
        amps *= rng.uniform(0.05, 0.4) / np.sum(np.abs(amps))
        u = 1.0 + sum(a * np.cos((k + 1) * rho) for k, a in enumerate(amps))
        min_q = min(min_q, conformal.yamabe_quotient(u))
    checks.append(_check("quotient-family-floor", conformal.YAMABE_S4 - min_q, 1e-6))
    return checks


def _suite_gap(cfg):
    rep = gap_report(cfg)
    checks = [
        _check("verdict-equality", 0.0 if rep.verdict == "equality" else 1.0, 0.5),
        _check("slack-relative", abs(rep.slack) / rep.yamabe, cfg.tol),
    ]
    if rep.equality_residual is not None:
        checks.append(_check("equality-identity", rep.equality_residual, 1e-8))
    checks.append(_check("rhs-recomputable",
                         abs(rep.rhs - (3.0 * rep.gamma1 * rep.f_plus_l2
                                        + 2.0 * np.sqrt(6.0) * rep.w_plus_l2)), 0.0))
    flat = gap_report(GapConfig(group=cfg.group, connection="flat", seed=cfg.seed))
    checks.append(_check("flat-is-case-1", 0.0 if flat.verdict == "case-1" else 1.0, 0.5))
    return checks


_SUITES = {
    "kato": _suite_kato,
    "bochner": _suite_bochner,
    "bracket-sharpness": _suite_bracket_sharpness,
    "weyl-bound": _suite_weyl_bound,
    "circ-basis": _suite_circ_basis,
    "gamma-constants": _suite_gamma_constants,
    "energy": _suite_energy,
    "chern-weil": _suite_chern_weil,
    "eigenvalue": _suite_eigenvalue,
    "covariance": _suite_covariance,
    "yamabe-quotient": _suite_yamabe,
    "gap": _suite_gap,
}


def run_suite(name, cfg=None):
    """Run one named suite; unknown ids raise with the available list."""
    if name not in _SUITES:
        raise ConfigError(f"unknown suite {name!r}; available: {', '.join(SUITE_IDS)}")
    cfg = cfg or GapConfig()
    t0 = time.perf_counter()
    checks = _SUITES[name](cfg)
    runtime = time.perf_counter() - t0
    return SuiteResult(name, checks, all(c.passed for c in checks), runtime)


def run_all(cfg=None):
    cfg = cfg or GapConfig()
    return [run_suite(name, cfg) for name in SUITE_IDS]


# -- report documents ---------------------------------------------------------

def report_document(cfg, suites=(), extras=None, command=""):
    """Assemble the versioned report structure (no wall-clock fields)."""
    doc = {
        'schema': SCHEMA,
        'command': command,
        'config': cfg.to_dict(),
        'suites': [s.to_dict() for s in suites],
    }
    if extras:
        doc.update(extras)
    return doc


def render(doc, fmt="text"):
    """Serialize a report document as json, csv, or human-readable text."""
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        lines = ["suite,check,passed,residual,tolerance"]
        for s in doc.get('suites', []):
            for c in s['checks']:
                lines.append(f"{s['suite']},{c['name']},{int(c['passed'])},"
                             f"{c['residual']:.6e},{c['tolerance']:.6e}")
        return "\n".join(lines) + "\n"
    if fmt == "text":
        lines = [f"# {doc['schema']}  command={doc['command']}"]
        for s in doc.get('suites', []):
            status = "PASS" if s['passed'] else "FAIL"
            lines.append(f"[{status}] suite {s['suite']}")
            for c in s['checks']:
                mark = "ok " if c['passed'] else "BAD"
                lines.append(f"    {mark} {c['name']}: residual {c['residual']:.3e}"
                             f" (tol {c['tolerance']:.1e})")
        for key, value in doc.items():
            if key in ('schema', 'command', 'config', 'suites'):
                continue
            lines.append(f"{key}: {json.dumps(value)}")
        return "\n".join(lines) + "\n"
    raise ConfigError(f"unknown format {fmt!r}")
