"""Detection probability and classical upper bounds.

For a photon-added thermal state seen by a detector of efficiency ``eta``:

* ``p``          single-photon detection probability,
* ``S``          bound obeyed by every classical state,
* ``M_delta``    bound obeyed if the ideal detector (after loss) were classical,
* ``M_delta_tilde``  bound obeyed if the real lossy detector were classical.

Exceeding a bound certifies nonclassicality of the corresponding object.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .models import MaxMode, _check_eta, _check_nbar, lossy_pats_q_max, pats_q_max

__all__ = [
    "BoundReport",
    "probability",
    "bound_s",
    "bound_m_delta",
    "bound_m_delta_tilde",
    "report",
]


def probability(nbar, eta) -> float:
    """``p = eta (1 + 2 nbar - eta nbar) / (1 + eta nbar)^3``."""
    nbar = _check_nbar(nbar)
    eta = _check_eta(eta)
    return eta * (1 + 2 * nbar - eta * nbar) / (1 + eta * nbar) ** 3


def bound_s() -> float:
    """State bound ``pi * max Q_delta = 1/e``; loss does not change it."""
    return math.exp(-1.0)


def bound_m_delta(nbar, eta, mode=MaxMode.PAPER) -> float:
    """Measurement bound for the ideal detector acting on the lossy state."""
    # tr(|1><1|) = 1
    return math.pi * lossy_pats_q_max(nbar, eta, mode)[1]


def bound_m_delta_tilde(nbar, eta) -> float:
    """Measurement bound for the real detector: ``1 / (e eta (nbar + 1))``."""
    eta = _check_eta(eta)
    # pi * max Q_rho * tr(delta_tilde), tr(delta_tilde) = 1/eta
    return math.pi * pats_q_max(nbar)[1] / eta


@dataclass(frozen=True)
class BoundReport:
    nbar: float
    eta: float
    p: float
    s_bound: float
    m_delta: float
    m_delta_mode: MaxMode
    m_delta_tilde: float

    @property
    def violates_s(self) -> bool:
        return self.p > self.s_bound

    @property
    def violates_m_delta(self) -> bool:
        return self.p > self.m_delta

    @property
    def violates_m_delta_tilde(self) -> bool:
        return self.p > self.m_delta_tilde

    @property
    def violation_class(self) -> str:
        """Three bits ``S, M_delta, M_delta_tilde``; ``"111"`` means all exceeded."""
        flags = (self.violates_s, self.violates_m_delta, self.violates_m_delta_tilde)
        return "".join("1" if f else "0" for f in flags)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["m_delta_mode"] = self.m_delta_mode.value
        d["violates_s"] = self.violates_s
        d["violates_m_delta"] = self.violates_m_delta
        d["violates_m_delta_tilde"] = self.violates_m_delta_tilde
        return d


def report(nbar, eta, mode=MaxMode.PAPER) -> BoundReport:
    mode = MaxMode(mode)
    return BoundReport(
        nbar=float(nbar),
        eta=float(eta),
        p=probability(nbar, eta),
        s_bound=bound_s(),
        m_delta=bound_m_delta(nbar, eta, mode),
        m_delta_mode=mode,
        m_delta_tilde=bound_m_delta_tilde(nbar, eta),
    )
