"""Brute-force cross-checks of every closed form against truncated Fock sums,
numeric maximization and quadrature.

Each ``verify_*`` function returns a :class:`Check`; failures are recorded,
never raised, so a full run doubles as a diagnostic table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from . import bounds
from .fock import FockDiagonal, apply_loss, pair_probability, q_at, trace
from .maximize import maximize_radial
from .models import (
    DEFAULT_TAIL_TOL,
    FockSumQ,
    IdealDetQ,
    IneffDetQ,
    LossyPatsQ,
    MaxMode,
    PatsQ,
    ideal_det_q,
    ideal_detector,
    inefficient_det_q,
    inefficient_detector,
    lossy_pats_q_max,
    photon_added_thermal,
    poissonian,
    thermal,
)

__all__ = [
    "VerifyConfig",
    "Check",
    "VerifyReport",
    "default_grid",
    "thermal_probability",
    "verify_probability",
    "verify_q_maxima",
    "verify_classical_never_violates",
    "verify_duality_and_traces",
    "verify_fock_profiles",
    "probe_low_eta_exception",
    "run_all",
]


# Fock-sum probabilities carry a few ulp of roundoff; Poisson light of mean one
# attains S = 1/e exactly, so "never exceeds" is checked to this margin.
ROUNDOFF = 1e-14


def default_grid():
    """``nbar in {0, 0.1, .., 3.0}`` times ``eta in {0.05, 0.1, .., 1.0}``."""
    nbars = [round(0.1 * i, 10) for i in range(31)]
    etas = [round(0.05 * j, 10) for j in range(1, 21)]
    return [(n, e) for n in nbars for e in etas]


@dataclass(frozen=True)
class VerifyConfig:
    tail_tol: float = DEFAULT_TAIL_TOL
    match_tol: float = 1e-9
    grid: tuple = field(default_factory=lambda: tuple(default_grid()))
    rng_seed: int = 0
    n_mixtures: int = 100

    def __post_init__(self):
        if not (self.tail_tol > 0 and self.match_tol > 0):
            raise ValueError("tolerances must be positive")
        if not self.grid:
            raise ValueError("grid must be nonempty")
        if any(not (0 < eta <= 1) or nbar < 0 for nbar, eta in self.grid):
            raise ValueError("grid points need nbar >= 0 and eta in (0, 1]")

    @property
    def etas(self):
        return sorted({eta for _, eta in self.grid})

    @property
    def nbars(self):
        return sorted({nbar for nbar, _ in self.grid})


@dataclass(frozen=True)
class Check:
    name: str
    max_abs_error: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple
    seed: int
    notes: tuple = ()

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def thermal_probability(nbar, eta):
    """Single-click probability of a thermal state: ``eta nbar / (1 + eta nbar)^2``.

    Loss turns a thermal state into a thermal state of mean ``eta nbar``,
    whose one-photon weight is ``(1 - x) x`` with ``x = eta nbar / (1 + eta nbar)``.
    """
    m = eta * nbar
    return m / (1 + m) ** 2


def verify_probability(cfg: VerifyConfig) -> Check:
    ideal = ideal_detector()
    worst = 0.0
    where = None
    for nbar, eta in cfg.grid:
        rho = photon_added_thermal(nbar, cfg.tail_tol)
        closed = bounds.probability(nbar, eta)
        lossy_route = pair_probability(apply_loss(rho, eta), ideal)
        real_route = pair_probability(rho, inefficient_detector(eta, cfg.tail_tol))
        err = max(abs(closed - lossy_route), abs(closed - real_route))
        if err > worst:
            worst, where = err, (nbar, eta)
    detail = f"worst at nbar={where[0]}, eta={where[1]}" if where else ""
    return Check("probability", worst, worst < cfg.match_tol, detail)


def verify_q_maxima(cfg: VerifyConfig) -> Check:
    """Closed-form maxima against the numeric maximizer.

    Relative error uses the physical (``u >= 0``) maxima. Where the stationary
    point is negative, the numeric maximum must also sit at or below the
    literal stationary-point value, strictly below it somewhere.
    """
    profiles = [IdealDetQ()]
    profiles += [IneffDetQ(eta) for eta in cfg.etas]
    profiles += [PatsQ(nbar) for nbar in cfg.nbars]
    profiles += [LossyPatsQ(nbar, eta) for nbar, eta in cfg.grid]

    worst = 0.0
    bad_ineq = []
    strict = 0
    boundary_points = 0
    for prof in profiles:
        numeric = maximize_radial(prof).q_max
        analytic = prof.analytic_max(MaxMode.TRUE)[1]
        worst = max(worst, abs(numeric - analytic) / analytic)
        if isinstance(prof, LossyPatsQ) and prof.eta * (prof.nbar + 2) < 1:
            boundary_points += 1
            literal = lossy_pats_q_max(prof.nbar, prof.eta, MaxMode.PAPER)[1]
            if numeric > literal * (1 + cfg.match_tol):
                bad_ineq.append((prof.nbar, prof.eta))
            elif numeric < literal:
                strict += 1
    passed = worst < cfg.match_tol and not bad_ineq and (boundary_points == 0 or strict > 0)
    detail = f"{len(profiles)} profiles, {boundary_points} boundary-regime, {strict} strictly below literal"
    if bad_ineq:
        detail += f"; numeric above literal at {bad_ineq[:3]}"
    return Check("q_maxima", worst, passed, detail)


def _random_classical_mixture(rng, tail_tol):
    k = int(rng.integers(2, 6))
    parts = []
    for _ in range(k):
        mean = float(rng.uniform(0.0, 3.0))
        parts.append(thermal(mean, tail_tol) if rng.random() < 0.5 else poissonian(mean, tail_tol))
    coeffs = rng.dirichlet(np.ones(k))
    size = max(len(p) for p in parts)
    w = np.zeros(size)
    tail = 0.0
    for c, p in zip(coeffs, parts):
        w[: len(p)] += c * p.weights
        tail += c * p.tail_bound
    return FockDiagonal(w, parts[0].kind, tail)


def verify_classical_never_violates(cfg: VerifyConfig) -> Check:
    """Classical states never exceed ``S`` with either detector.

    Thermal states additionally stay below their own measurement bound
    ``pi Q_max tr(delta_tilde)``, with ``Q_max`` found numerically from the
    Fock sum, and match the closed sum :func:`thermal_probability`.
    """
    rng = np.random.default_rng(cfg.rng_seed)
    s = bounds.bound_s()
    ideal = ideal_detector()
    real = {eta: inefficient_detector(eta, cfg.tail_tol) for eta in cfg.etas}

    states = []
    for nbar in cfg.nbars:
        states.append(("thermal", nbar, thermal(nbar, cfg.tail_tol)))
        states.append(("poisson", nbar, poissonian(nbar, cfg.tail_tol)))
    for i in range(cfg.n_mixtures):
        states.append(("mixture", i, _random_classical_mixture(rng, cfg.tail_tol)))

    violations = []
    worst = 0.0
    for label, param, rho in states:
        if label == "thermal":
            q_max = maximize_radial(FockSumQ(rho)).q_max
        for eta in cfg.etas:
            p_ideal = pair_probability(apply_loss(rho, eta), ideal)
            p_real = pair_probability(rho, real[eta])
            if max(p_ideal, p_real) > s + ROUNDOFF:
                violations.append((label, param, eta))
            if label == "thermal":
                closed = thermal_probability(param, eta)
                worst = max(worst, abs(p_ideal - closed), abs(p_real - closed))
                m_tilde = math.pi * q_max / eta
                if p_real > m_tilde + ROUNDOFF:
                    violations.append(("thermal>M_tilde", param, eta))

    passed = not violations and worst < cfg.match_tol
    detail = f"{len(states)} states (seed {cfg.rng_seed}), {len(violations)} violations"
    if violations:
        detail += f"; first {violations[:3]}"
    return Check("classical_never_violates", worst, passed, detail)


def verify_duality_and_traces(cfg: VerifyConfig) -> Check:
    """Trace of the real detector, Q rescaling identity, and Q normalization."""
    problems = []
    trace_err = max(
        abs(trace(inefficient_detector(eta, cfg.tail_tol)) - 1 / eta) for eta in cfg.etas
    )
    if not trace_err < cfg.match_tol:
        problems.append(f"trace error {trace_err:.3g}")

    u = np.linspace(0.0, 20.0, 64)
    scale_err = max(
        float(np.max(np.abs(inefficient_det_q(u, eta) - ideal_det_q(eta * u))))
        for eta in cfg.etas
    )
    if not scale_err <= 1e-14:
        problems.append(f"rescaling error {scale_err:.3g}")

    # integral of pi q(u) du over u >= 0 equals the trace
    small = [
        photon_added_thermal(0.7, cutoff=6),
        thermal(1.0, cutoff=5),
        inefficient_detector(0.4, cutoff=6),
        ideal_detector(),
    ]
    quad_err = 0.0
    for op in small:
        val, _ = integrate.quad(lambda x: math.pi * q_at(op, x), 0.0, np.inf,
                                epsabs=1e-13, epsrel=1e-12, limit=200)
        quad_err = max(quad_err, abs(val - trace(op)))
    if not quad_err < 1e-8:
        problems.append(f"normalization error {quad_err:.3g}")

    return Check(
        "duality_and_traces",
        max(trace_err, scale_err, quad_err),
        not problems,
        "; ".join(problems) or f"{len(cfg.etas)} detectors, {len(small)} quadratures",
    )


def verify_fock_profiles(cfg: VerifyConfig) -> Check:
    """Closed-form Q profiles against Fock sums of the matching operators."""
    u = np.linspace(0.0, 12.0, 64)
    worst = 0.0
    profiles = [IdealDetQ()] + [IneffDetQ(e) for e in cfg.etas] + [
        LossyPatsQ(n, e) for n, e in cfg.grid[:: max(1, len(cfg.grid) // 60)]
    ]
    for prof in profiles:
        op = prof.to_fock(cfg.tail_tol)
        worst = max(worst, float(np.max(np.abs(prof(u) - FockSumQ(op)(u)))))
    return Check("fock_profiles", worst, worst < cfg.match_tol, f"{len(profiles)} profiles")


def probe_low_eta_exception(eta=0.05, step=1e-4):
    """Whether thermal photons raise the click probability at small ``nbar``."""
    p0 = bounds.probability(0.0, eta)
    p1 = bounds.probability(step, eta)
    rising = p1 > p0
    return f"eta={eta}: dp/dnbar at nbar=0 {'> 0' if rising else '<= 0'} ({(p1 - p0) / step:.6g})"


def run_all(cfg: VerifyConfig | None = None) -> VerifyReport:
    cfg = cfg or VerifyConfig()
    checks = (
        verify_probability(cfg),
        verify_q_maxima(cfg),
        verify_classical_never_violates(cfg),
        verify_duality_and_traces(cfg),
        verify_fock_profiles(cfg),
    )
    return VerifyReport(checks, cfg.rng_seed, (probe_low_eta_exception(),))
