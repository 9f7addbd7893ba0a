import math

import pytest

from photonbounds import oracle
from photonbounds.fock import apply_loss, pair_probability
from photonbounds.models import ideal_detector, poissonian, thermal


@pytest.fixture(scope="module")
def cfg():
    return oracle.VerifyConfig()


def test_default_grid_shape(cfg):
    assert len(cfg.grid) == 31 * 20
    assert cfg.nbars[0] == 0.0 and cfg.nbars[-1] == 3.0
    assert cfg.etas[0] == 0.05 and cfg.etas[-1] == 1.0


def test_config_validation():
    with pytest.raises(ValueError):
        oracle.VerifyConfig(grid=())
    with pytest.raises(ValueError):
        oracle.VerifyConfig(grid=((0.2, 0.0),))
    with pytest.raises(ValueError):
        oracle.VerifyConfig(match_tol=0.0)


def test_probability_check(cfg):
    c = oracle.verify_probability(cfg)
    assert c.passed, c
    assert c.max_abs_error < 1e-9


def test_probability_check_exact_at_pure_single_photon():
    c = oracle.verify_probability(oracle.VerifyConfig(grid=((0.0, 1.0),)))
    assert c.max_abs_error == 0.0


def test_q_maxima_check(cfg):
    c = oracle.verify_q_maxima(cfg)
    assert c.passed, c
    assert "strictly below literal" in c.detail


def test_q_maxima_single_boundary_point():
    c = oracle.verify_q_maxima(oracle.VerifyConfig(grid=((0.2, 0.4),)))
    assert c.passed
    assert "1 boundary-regime, 1 strictly below" in c.detail


def test_classical_check(cfg):
    c = oracle.verify_classical_never_violates(cfg)
    assert c.passed, c
    assert "0 violations" in c.detail


def test_poisson_mean_one_attains_s():
    p = pair_probability(poissonian(1.0), ideal_detector())
    assert p == pytest.approx(math.exp(-1), abs=1e-15)


def test_thermal_closed_sum():
    rho = apply_loss(thermal(1.0), 1.0)
    assert pair_probability(rho, ideal_detector()) == pytest.approx(0.25, abs=1e-12)
    for nbar, eta in [(0.5, 0.3), (2.0, 0.8), (3.0, 1.0)]:
        fock = pair_probability(apply_loss(thermal(nbar), eta), ideal_detector())
        assert fock == pytest.approx(oracle.thermal_probability(nbar, eta), abs=1e-10)


def test_duality_and_traces_check(cfg):
    c = oracle.verify_duality_and_traces(cfg)
    assert c.passed, c


def test_fock_profiles_check(cfg):
    assert oracle.verify_fock_profiles(cfg).passed


def test_tolerance_knob_is_live():
    rep = oracle.run_all(oracle.VerifyConfig(match_tol=1e-15))
    assert not rep.overall
    assert {c.name for c in rep.failures()} >= {"probability", "duality_and_traces"}


def test_run_all_deterministic():
    a = oracle.run_all(oracle.VerifyConfig(rng_seed=42))
    b = oracle.run_all(oracle.VerifyConfig(rng_seed=42))
    assert a == b
    assert a.overall and len(a.checks) >= 4
    assert a.seed == 42


def test_low_eta_probe_reports_rise():
    assert "> 0" in oracle.probe_low_eta_exception(0.05)
    assert "<= 0" in oracle.probe_low_eta_exception(0.9)
