"""Classical-bound nonclassicality tests for states and detectors.

Photon-added thermal states measured by an inefficient single-photon
detector: one click probability, three independent classical bounds.
"""

from .bounds import (
    BoundReport,
    bound_m_delta,
    bound_m_delta_tilde,
    bound_s,
    probability,
    report,
)
from .fock import (
    FockDiagonal,
    Kind,
    apply_loss,
    mandel_q,
    moments,
    pair_probability,
    q_at,
    trace,
)
from .maximize import MaxResult, maximize_radial
from .models import (
    DetectorSpec,
    MaxMode,
    ThermalParams,
    ideal_detector,
    inefficient_detector,
    lossy_pats_q,
    lossy_pats_q_max,
    photon_added_thermal,
    poissonian,
    thermal,
)

__version__ = "0.1.0"
