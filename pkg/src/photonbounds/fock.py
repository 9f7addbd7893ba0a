"""Truncated Fock-diagonal operators.

Every state and detector in this package is diagonal in the photon-number
basis, so an operator is just a weight sequence ``w_0 .. w_N`` together with
an upper bound on the mass lost by truncating at ``N``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, xlogy
from scipy.stats import binom

__all__ = [
    "Kind",
    "FockDiagonal",
    "pair_probability",
    "trace",
    "apply_loss",
    "q_at",
    "moments",
    "mandel_q",
    "number_state",
    "vacuum",
    "poisson_weights",
]

# roundoff allowance used when checking construction invariants
_EPS = 64 * np.finfo(float).eps


class Kind(enum.Enum):
    STATE = "state"
    POVM_ELEMENT = "povm_element"


@dataclass(frozen=True)
class FockDiagonal:
    """Diagonal operator ``sum_n w_n |n><n|`` truncated at ``cutoff``.

    ``tail_bound`` bounds the weight that lives above the cutoff and was
    dropped. For states the retained weights sum to within ``tail_bound`` of
    one; for POVM elements every weight is a probability and so at most one.
    """

    weights: np.ndarray
    kind: Kind = Kind.STATE
    tail_bound: float = 0.0

    def __post_init__(self):
        w = np.array(self.weights, dtype=float, copy=True).reshape(-1)
        if w.size == 0:
            raise ValueError("need at least one weight (cutoff >= 0)")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        tb = float(self.tail_bound)
        if not (np.isfinite(tb) and tb >= 0):
            raise ValueError(f"tail_bound must be finite and >= 0, got {tb}")
        kind = Kind(self.kind)
        if kind is Kind.STATE:
            total = w.sum()
            if abs(total - 1.0) > tb + _EPS * max(w.size, 1):
                raise ValueError(
                    f"state weights sum to {total!r}, outside tail_bound {tb:g} of 1"
                )
        elif np.any(w > 1.0 + _EPS):
            raise ValueError("POVM element weights must not exceed 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "tail_bound", tb)

    @property
    def cutoff(self) -> int:
        return self.weights.size - 1

    def __len__(self):
        return self.weights.size


def vacuum(cutoff: int = 0) -> FockDiagonal:
    return number_state(0, cutoff)


def number_state(n: int, cutoff: int | None = None,
                 kind: Kind = Kind.STATE) -> FockDiagonal:
    """Projector ``|n><n|`` padded with zeros up to ``cutoff``."""
    if n < 0:
        raise ValueError("photon number must be >= 0")
    cutoff = n if cutoff is None else cutoff
    if cutoff < n:
        raise ValueError("cutoff below the occupied level")
    w = np.zeros(cutoff + 1)
    w[n] = 1.0
    return FockDiagonal(w, kind=kind)


def _padded(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    size = max(a.size, b.size)
    return np.pad(a, (0, size - a.size)), np.pad(b, (0, size - b.size))


def pair_probability(rho: FockDiagonal, delta: FockDiagonal) -> float:
    """Event probability ``tr(rho delta)`` for two diagonal operators.

    The shorter weight sequence is zero-padded. The truncation error is at most
    ``rho.tail_bound * max(delta.weights)``.
    """
    a, b = _padded(rho.weights, delta.weights)
    return float(np.dot(a, b))


def trace(d: FockDiagonal) -> float:
    return float(d.weights.sum())


def _loss_matrix(cutoff: int, eta: float) -> np.ndarray:
    # M[k, n] = C(n, k) eta^k (1 - eta)^(n - k)
    if eta < 1e-300:
        # scipy's binomial pmf overflows near the smallest normal floats; the
        # map differs from eta = 0 by at most cutoff * eta
        eta = 0.0
    k = np.arange(cutoff + 1)
    return binom.pmf(k[:, None], k[None, :], eta)


def apply_loss(d: FockDiagonal, eta: float) -> FockDiagonal:
    """Pass ``d`` through a beam splitter of intensity transmission ``eta``.

    Each ``|n><n|`` is mapped to the binomial mixture
    ``sum_k C(n,k) eta^k (1-eta)^(n-k) |k><k|``. The cutoff is kept since
    loss never raises the photon number.
    """
    eta = float(eta)
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta must lie in [0, 1], got {eta}")
    if eta == 1.0:
        return d
    w = _loss_matrix(d.cutoff, eta) @ d.weights
    return FockDiagonal(w, kind=d.kind, tail_bound=d.tail_bound)


def poisson_weights(u, n_max: int) -> np.ndarray:
    """``u^n e^{-u} / n!`` for ``n = 0..n_max``, shape ``u.shape + (n_max+1,)``.

    Evaluated in log space so that large ``u`` and ``n`` do not overflow.
    """
    u = np.asarray(u, dtype=float)
    n = np.arange(n_max + 1)
    uu = u[..., None]
    return np.exp(xlogy(n, uu) - uu - gammaln(n + 1))


def q_at(d: FockDiagonal, u):
    """Husimi Q density of ``d`` at ``u = |alpha|^2``.

    For a diagonal operator ``Q(alpha) = (1/pi) sum_n w_n e^{-u} u^n / n!``.
    Accepts scalars or arrays; returns the same shape.
    """
    u_arr = np.asarray(u, dtype=float)
    if np.any(u_arr < 0):
        raise ValueError("u = |alpha|^2 must be >= 0")
    q = poisson_weights(u_arr, d.cutoff) @ d.weights / np.pi
    return float(q) if q.ndim == 0 else q


def moments(d: FockDiagonal) -> tuple[float, float]:
    """Mean and second moment of the photon number."""
    n = np.arange(d.weights.size, dtype=float)
    return float(np.dot(n, d.weights)), float(np.dot(n * n, d.weights))


def mandel_q(d: FockDiagonal) -> float:
    """Mandel parameter ``(var - mean) / mean``; positive is super-Poissonian."""
    mean, second = moments(d)
    if mean <= 0:
        raise ValueError("Mandel Q is undefined for the vacuum (mean photon number 0)")
    return (second - mean * mean - mean) / mean
