import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from photonbounds.bounds import (
    bound_m_delta,
    bound_m_delta_tilde,
    bound_s,
    probability,
    report,
)
from photonbounds.fock import apply_loss, pair_probability
from photonbounds.models import (
    MaxMode,
    ideal_det_q,
    ideal_detector,
    inefficient_detector,
    photon_added_thermal,
    thermal,
)
from photonbounds.oracle import default_grid

# Frozen from Fock-sum / numeric-maximum oracles (tail < 1e-12).
P_02_09 = 0.668276698
P_1_04 = 0.379008746
M_DELTA_02_09 = 0.313024053
M_DELTA_02_04_PAPER = 0.528405521
M_DELTA_02_04_TRUE = 0.514403292
M_TILDE_02_09 = 0.340629112
M_TILDE_02_04 = 0.766415502


def _fock_probability(nbar, eta):
    return pair_probability(apply_loss(photon_added_thermal(nbar), eta), ideal_detector())


def test_probability_examples():
    assert probability(0.0, 1.0) == 1.0
    assert probability(0.2, 0.9) == pytest.approx(P_02_09, abs=1e-9)
    assert probability(1.0, 0.4) == pytest.approx(P_1_04, abs=1e-9)
    assert probability(1.0, 0.4) > bound_s()


def test_probability_rejects_bad_domain():
    for nbar, eta in [(-1, 0.5), (0.2, 0.0), (0.2, 1.1)]:
        with pytest.raises(ValueError):
            probability(nbar, eta)


def test_bound_s():
    assert bound_s() == pytest.approx(0.367879441, abs=1e-9)
    assert bound_s() == report(0.3, 0.4).s_bound == report(0.3, 0.9).s_bound
    assert math.pi * ideal_det_q(1.0) == pytest.approx(bound_s(), rel=1e-15)


def test_bound_m_delta_examples():
    for mode in MaxMode:
        assert bound_m_delta(0.2, 0.9, mode) == pytest.approx(M_DELTA_02_09, abs=1e-8)
    assert bound_m_delta(0.2, 0.4, MaxMode.PAPER) == pytest.approx(M_DELTA_02_04_PAPER, abs=1e-8)
    assert bound_m_delta(0.2, 0.4, MaxMode.TRUE) == pytest.approx(M_DELTA_02_04_TRUE, abs=1e-8)
    for nbar in (0.0, 0.3, 2.0):
        assert bound_m_delta(nbar, 1.0) == pytest.approx(1 / (math.e * (nbar + 1)), rel=1e-14)
        assert bound_m_delta(nbar, 1.0) == pytest.approx(bound_m_delta_tilde(nbar, 1.0), rel=1e-14)


def test_bound_m_delta_tilde_examples():
    assert bound_m_delta_tilde(0.0, 1.0) == pytest.approx(bound_s(), rel=1e-15)
    assert bound_m_delta_tilde(0.2, 0.9) == pytest.approx(M_TILDE_02_09, abs=1e-9)
    assert bound_m_delta_tilde(0.2, 0.4) == pytest.approx(M_TILDE_02_04, abs=1e-9)
    with pytest.raises(ValueError):
        bound_m_delta_tilde(0.2, 0.0)


def test_m_tilde_matches_truncated_trace_route():
    for nbar, eta in [(0.2, 0.9), (0.2, 0.4)]:
        # pi * Q_max of the state times truncated tr(delta_tilde)
        route = 1 / (math.e * (nbar + 1)) * inefficient_detector(eta).weights.sum()
        assert bound_m_delta_tilde(nbar, eta) == pytest.approx(route, abs=1e-11)


def test_report_headline_point():
    r = report(0.2, 0.9)
    assert r.violates_s and r.violates_m_delta and r.violates_m_delta_tilde
    assert r.violation_class == "111"
    assert r.m_delta_mode is MaxMode.PAPER


def test_report_low_efficiency_point():
    r = report(0.2, 0.4, MaxMode.PAPER)
    assert r.p == pytest.approx(0.419143423, abs=1e-9)
    assert r.violates_s
    assert not r.violates_m_delta and not r.violates_m_delta_tilde
    assert r.violation_class == "100"


def test_report_as_dict_is_self_describing():
    d = report(0.5, 0.5, "true").as_dict()
    assert d["m_delta_mode"] == "true"
    assert set(d) >= {"p", "s_bound", "m_delta", "m_delta_tilde", "violates_s"}


def test_thermal_light_never_flags():
    # p_th = eta nbar / (1 + eta nbar)^2 <= 1/4 < 1/e
    for nbar, eta in default_grid():
        p = pair_probability(apply_loss(thermal(nbar), eta), ideal_detector())
        assert p == pytest.approx(eta * nbar / (1 + eta * nbar) ** 2, abs=1e-10)
        assert p <= 0.25 + 1e-15 < bound_s()


# -- properties ------------------------------------------------------------------

GRID = default_grid()


def test_m_tilde_above_true_m_delta_everywhere():
    for nbar, eta in GRID:
        assert bound_m_delta_tilde(nbar, eta) >= bound_m_delta(nbar, eta, MaxMode.TRUE)


def test_m_tilde_above_literal_m_delta_away_from_low_efficiency():
    for nbar, eta in GRID:
        if eta >= 0.3:
            assert bound_m_delta_tilde(nbar, eta) >= bound_m_delta(nbar, eta, MaxMode.PAPER)


def test_literal_m_delta_overtakes_m_tilde_at_low_efficiency():
    # the stationary-point value grows like exp(1/eta) once it leaves u >= 0
    crossings = [(n, e) for n, e in GRID
                 if bound_m_delta(n, e, MaxMode.PAPER) > bound_m_delta_tilde(n, e)]
    assert (0.0, 0.05) in crossings
    assert len(crossings) == 78
    assert max(e for _, e in crossings) <= 0.25
    assert all(e * (n + 2) < 1 for n, e in crossings)


def test_bounds_coincide_at_unit_efficiency():
    for nbar in np.linspace(0, 3, 13):
        for mode in MaxMode:
            assert bound_m_delta(nbar, 1.0, mode) == pytest.approx(
                bound_m_delta_tilde(nbar, 1.0), rel=1e-14)


@given(st.floats(0, 3), st.floats(0.05, 1))
def test_closed_probability_equals_both_fock_routes(nbar, eta):
    rho = photon_added_thermal(nbar)
    lossy = pair_probability(apply_loss(rho, eta), ideal_detector())
    real = pair_probability(rho, inefficient_detector(eta))
    p = probability(nbar, eta)
    assert abs(p - lossy) < 1e-10
    assert abs(p - real) < 1e-10


@pytest.mark.parametrize("eta", [0.5, 0.6, 0.8, 0.9, 1.0])
def test_probability_falls_with_thermal_photons(eta):
    nbars = np.arange(61) * 0.05
    p = np.array([probability(n, eta) for n in nbars])
    assert np.all(np.diff(p) <= 0)


@pytest.mark.parametrize("eta", [0.05, 0.4])
def test_low_efficiency_exception(eta):
    # thermal photons raise the click rate when eta < 1/2
    nbars = np.arange(61) * 0.05
    p = np.array([probability(n, eta) for n in nbars])
    assert p.max() > p[0]
    assert _fock_probability(0.1, eta) > _fock_probability(0.0, eta)


@given(st.floats(0, 3), st.floats(0.01, 1))
def test_bounds_positive_and_flags_strict(nbar, eta):
    for mode in MaxMode:
        r = report(nbar, eta, mode)
        assert r.s_bound > 0 and r.m_delta > 0 and r.m_delta_tilde > 0
        assert 0 <= r.p <= 1
        assert r.violates_s == (r.p > r.s_bound)
        assert r.violates_m_delta == (r.p > r.m_delta)
        assert r.violates_m_delta_tilde == (r.p > r.m_delta_tilde)
