"""Thermal and photon-added thermal states, single-photon detectors, and
their radial Husimi profiles in closed form.

Each closed-form profile can also hand back the equivalent truncated
:class:`~photonbounds.fock.FockDiagonal`, which the test-suite and the
``verify`` command use as an independent numeric route.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import poisson

from .fock import FockDiagonal, Kind, apply_loss, q_at

__all__ = [
    "MaxMode",
    "ThermalParams",
    "DetectorSpec",
    "thermal",
    "photon_added_thermal",
    "poissonian",
    "pats_p_rep",
    "pats_q",
    "pats_q_max",
    "ideal_detector",
    "ideal_det_q",
    "inefficient_detector",
    "inefficient_det_q",
    "lossy_pats_q",
    "lossy_pats_q_max",
    "QProfile",
    "PatsQ",
    "LossyPatsQ",
    "IdealDetQ",
    "IneffDetQ",
    "FockSumQ",
    "DEFAULT_TAIL_TOL",
    "MIN_CUTOFF",
]

DEFAULT_TAIL_TOL = 1e-12
MIN_CUTOFF = 32
_MAX_CUTOFF = 1 << 22


class MaxMode(enum.Enum):
    """How the maximum of the lossy photon-added thermal Q function is taken.

    ``PAPER`` evaluates the stationary-point formula as written, even when the
    stationary point sits at negative ``u``. ``TRUE`` maximizes over the
    physical half-line ``u >= 0``.
    """

    PAPER = "paper"
    TRUE = "true"


def _check_nbar(nbar):
    nbar = float(nbar)
    if not (math.isfinite(nbar) and nbar >= 0):
        raise ValueError(f"nbar must be finite and >= 0, got {nbar}")
    return nbar


def _check_eta(eta):
    eta = float(eta)
    if not (0.0 < eta <= 1.0):
        raise ValueError(f"eta must lie in (0, 1], got {eta}")
    return eta


@dataclass(frozen=True)
class ThermalParams:
    nbar: float

    def __post_init__(self):
        object.__setattr__(self, "nbar", _check_nbar(self.nbar))

    @property
    def xi(self) -> float:
        return self.nbar / (self.nbar + 1.0)


@dataclass(frozen=True)
class DetectorSpec:
    """Single-photon detector with quantum efficiency ``eta``.

    Modelled as a beam splitter of amplitude transmission ``sqrt(eta)`` in
    front of an ideal detector. ``eta = 0`` is rejected.
    """

    eta: float

    def __post_init__(self):
        object.__setattr__(self, "eta", _check_eta(self.eta))

    @property
    def transmission(self) -> float:
        return math.sqrt(self.eta)


def _cutoff_for(tail, tol, floor=MIN_CUTOFF):
    """Smallest ``N >= floor`` with ``tail(N) < tol``; ``tail`` must decrease."""
    if not tol > 0:
        raise ValueError(f"tail tolerance must be > 0, got {tol}")
    if tail(floor) < tol:
        return floor
    lo, hi = floor, 2 * floor
    while tail(hi) >= tol:
        lo, hi = hi, 2 * hi
        if hi > _MAX_CUTOFF:
            raise ValueError("required Fock cutoff is unreasonably large")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail(mid) < tol:
            hi = mid
        else:
            lo = mid
    return hi


def _geometric_tail(xi, n):
    # sum_{m > n} (1 - xi) xi^m
    return xi ** (n + 1)


def _linear_geometric_tail(xi, n):
    # sum_{m > n} (1 - xi)^2 m xi^(m - 1)
    return xi**n * (n + 1 - n * xi)


def thermal(nbar, tail_tol=DEFAULT_TAIL_TOL, cutoff=None) -> FockDiagonal:
    """Thermal chaotic state with weights ``(1 - xi) xi^n``."""
    xi = ThermalParams(nbar).xi
    if cutoff is None:
        cutoff = _cutoff_for(lambda n: _geometric_tail(xi, n), tail_tol)
    n = np.arange(cutoff + 1)
    return FockDiagonal((1 - xi) * xi**n, Kind.STATE, _geometric_tail(xi, cutoff))


def photon_added_thermal(nbar, tail_tol=DEFAULT_TAIL_TOL, cutoff=None) -> FockDiagonal:
    """Single-photon-added thermal state, ``w_n = (1 - xi)^2 n xi^(n-1)``.

    ``nbar`` is the mean photon number of the thermal seed; the resulting
    state has mean ``2 nbar + 1``.
    """
    xi = ThermalParams(nbar).xi
    if cutoff is None:
        cutoff = _cutoff_for(lambda n: _linear_geometric_tail(xi, n), tail_tol)
    n = np.arange(cutoff + 1)
    w = np.zeros(cutoff + 1)
    w[1:] = (1 - xi) ** 2 * n[1:] * xi ** (n[1:] - 1)
    return FockDiagonal(w, Kind.STATE, _linear_geometric_tail(xi, cutoff))


def poissonian(mean, tail_tol=DEFAULT_TAIL_TOL, cutoff=None) -> FockDiagonal:
    """Phase-averaged coherent state: Poisson photon statistics."""
    mean = _check_nbar(mean)
    if cutoff is None:
        cutoff = _cutoff_for(lambda n: poisson.sf(n, mean), tail_tol)
    w = poisson.pmf(np.arange(cutoff + 1), mean)
    return FockDiagonal(w, Kind.STATE, float(poisson.sf(cutoff, mean)))


def pats_p_rep(u, nbar):
    """Glauber-Sudarshan P function of the photon-added thermal state.

    Regular but negative near the origin. Only defined for ``nbar > 0``;
    at ``nbar = 0`` it collapses to derivatives of a delta function.
    """
    nbar = _check_nbar(nbar)
    if nbar == 0:
        raise ValueError("P representation is singular at nbar = 0")
    u = np.asarray(u, dtype=float)
    out = ((nbar + 1) * u - nbar) * np.exp(-u / nbar) / (np.pi * nbar**3)
    return float(out) if out.ndim == 0 else out


def pats_q(u, nbar):
    nbar = _check_nbar(nbar)
    u = np.asarray(u, dtype=float)
    s = nbar + 1
    out = u * np.exp(-u / s) / (np.pi * s * s)
    return float(out) if out.ndim == 0 else out


def pats_q_max(nbar) -> tuple[float, float]:
    """Argmax and maximum of :func:`pats_q`: ``(nbar + 1, 1/(pi e (nbar+1)))``."""
    s = _check_nbar(nbar) + 1
    return s, 1.0 / (math.pi * math.e * s)


def ideal_detector(cutoff: int = 1) -> FockDiagonal:
    """Ideal single-photon detector, ``|1><1|``."""
    w = np.zeros(max(cutoff, 1) + 1)
    w[1] = 1.0
    return FockDiagonal(w, Kind.POVM_ELEMENT)


def ideal_det_q(u):
    u = np.asarray(u, dtype=float)
    out = u * np.exp(-u) / np.pi
    return float(out) if out.ndim == 0 else out


def _ineff_tail(eta, n):
    # sum_{m > n} eta m (1 - eta)^(m - 1)
    return _linear_geometric_tail(1 - eta, n) / eta


def inefficient_detector(spec, tail_tol=DEFAULT_TAIL_TOL, cutoff=None) -> FockDiagonal:
    """Real detector element ``eta sum_n (n+1) (1-eta)^n |n+1><n+1|``.

    ``w_n = eta n (1 - eta)^(n-1)`` is the chance that exactly one of ``n``
    photons survives, so each weight is at most one. The full trace is
    ``1/eta``; ``tail_bound`` is the untruncated remainder.
    """
    eta = spec.eta if isinstance(spec, DetectorSpec) else _check_eta(spec)
    if cutoff is None:
        cutoff = _cutoff_for(lambda n: _ineff_tail(eta, n), tail_tol)
    n = np.arange(cutoff + 1)
    w = np.zeros(cutoff + 1)
    w[1:] = eta * n[1:] * (1 - eta) ** (n[1:] - 1)
    return FockDiagonal(w, Kind.POVM_ELEMENT, _ineff_tail(eta, cutoff))


def inefficient_det_q(u, eta):
    """Q function of the real detector; equals ``ideal_det_q(eta * u)``."""
    eta = _check_eta(eta)
    return ideal_det_q(eta * np.asarray(u, dtype=float))


def lossy_pats_q(u, nbar, eta):
    """Q function of the photon-added thermal state after loss ``eta``."""
    nbar = _check_nbar(nbar)
    eta = _check_eta(eta)
    u = np.asarray(u, dtype=float)
    c = eta * nbar + 1
    out = ((nbar + 1) * eta * u / c**3 + (1 - eta) / c**2) * np.exp(-u / c) / np.pi
    return float(out) if out.ndim == 0 else out


def lossy_pats_q_max(nbar, eta, mode=MaxMode.PAPER) -> tuple[float, float]:
    """Location and value of the maximum of :func:`lossy_pats_q`.

    The stationary point is ``u* = c - (1 - eta) c / (eta (nbar + 1))`` with
    ``c = eta nbar + 1``; it is negative whenever ``eta (nbar + 2) < 1``.
    ``MaxMode.PAPER`` returns the stationary pair regardless.
    ``MaxMode.TRUE`` clamps to ``u* = 0`` in that regime, where the profile
    decreases monotonically on ``u >= 0``.
    """
    nbar = _check_nbar(nbar)
    eta = _check_eta(eta)
    mode = MaxMode(mode)
    if eta == 1.0:
        return pats_q_max(nbar)
    c = eta * nbar + 1
    if mode is MaxMode.TRUE and eta * (nbar + 2) < 1:
        return 0.0, (1 - eta) / (math.pi * c * c)
    u_star = c - (1 - eta) * c / (eta * (nbar + 1))
    exponent = -(eta * nbar + 2 * eta - 1) / (eta * (nbar + 1))
    try:
        growth = math.exp(exponent)
    except OverflowError:
        growth = math.inf
    return u_star, eta * (nbar + 1) / (math.pi * c * c) * growth


# -- radial profiles ---------------------------------------------------------


class QProfile:
    """Radial Husimi profile ``q(u)``, ``u = |alpha|^2``.

    Subclasses are callables. Closed-form ones also provide
    ``analytic_max()`` and ``to_fock()`` for the matching truncated operator.
    """

    def __call__(self, u):
        raise NotImplementedError

    def u_ceiling(self) -> float:
        """Search ceiling that leaves the maximum well inside ``[0, u_hi]``."""
        return 20.0

    def analytic_max(self, mode=MaxMode.TRUE) -> tuple[float, float]:
        raise NotImplementedError(f"{type(self).__name__} has no closed-form maximum")

    def to_fock(self, tail_tol=DEFAULT_TAIL_TOL) -> FockDiagonal:
        raise NotImplementedError


@dataclass(frozen=True)
class PatsQ(QProfile):
    nbar: float

    def __call__(self, u):
        return pats_q(u, self.nbar)

    def u_ceiling(self):
        return 10 * (self.nbar + 1) + 10

    def analytic_max(self, mode=MaxMode.TRUE):
        return pats_q_max(self.nbar)

    def to_fock(self, tail_tol=DEFAULT_TAIL_TOL):
        return photon_added_thermal(self.nbar, tail_tol)


@dataclass(frozen=True)
class LossyPatsQ(QProfile):
    nbar: float
    eta: float

    def __call__(self, u):
        return lossy_pats_q(u, self.nbar, self.eta)

    def u_ceiling(self):
        return 10 * (self.nbar + 1) / self.eta + 10

    def analytic_max(self, mode=MaxMode.TRUE):
        return lossy_pats_q_max(self.nbar, self.eta, mode)

    def to_fock(self, tail_tol=DEFAULT_TAIL_TOL):
        return apply_loss(photon_added_thermal(self.nbar, tail_tol), self.eta)


@dataclass(frozen=True)
class IdealDetQ(QProfile):
    def __call__(self, u):
        return ideal_det_q(u)

    def analytic_max(self, mode=MaxMode.TRUE):
        return 1.0, 1.0 / (math.e * math.pi)

    def to_fock(self, tail_tol=DEFAULT_TAIL_TOL):
        return ideal_detector()


@dataclass(frozen=True)
class IneffDetQ(QProfile):
    eta: float

    def __call__(self, u):
        return inefficient_det_q(u, self.eta)

    def u_ceiling(self):
        return 10 / self.eta + 10

    def analytic_max(self, mode=MaxMode.TRUE):
        # rescaled copy of the ideal profile: same height, stretched by 1/eta
        return 1.0 / self.eta, 1.0 / (math.e * math.pi)

    def to_fock(self, tail_tol=DEFAULT_TAIL_TOL):
        return inefficient_detector(self.eta, tail_tol)


@dataclass(frozen=True)
class FockSumQ(QProfile):
    operator: FockDiagonal

    def __call__(self, u):
        return q_at(self.operator, u)

    def u_ceiling(self):
        return 2.0 * self.operator.cutoff + 10

    def to_fock(self, tail_tol=DEFAULT_TAIL_TOL):
        return self.operator
