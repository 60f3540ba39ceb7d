"""End-to-end smoke tests for the svet python module."""

import math

import numpy as np
import pytest

import svet

ROOT2 = math.sqrt(2.0)


def ghz_matrix():
    rho = np.zeros((16, 16), dtype=complex)
    for i in (0, 15):
        for j in (0, 15):
            rho[i, j] = 0.5
    return rho


def test_ghz_analytic_maximum():
    x = svet.classify_xtype(ghz_matrix())
    result = svet.svetlichny_xtype(x)
    assert result.value == pytest.approx(8.0 * ROOT2, abs=1e-12)
    assert result.branch == "coherence"
    assert result.measure == pytest.approx(1.0, abs=1e-12)


def test_classification_round_trip():
    x = svet.classify_xtype(ghz_matrix())
    assert x.pair_index == 1
    assert x.pair_value == pytest.approx(0.5)
    back = svet.xtype_to_matrix(x)
    assert np.max(np.abs(back - ghz_matrix())) < 1e-14


def test_validation_report():
    report = svet.validate(ghz_matrix())
    assert report.passed
    assert report.trace_defect < 1e-12


def test_oracle_reaches_ghz_maximum():
    cfg = svet.OracleConfig()
    cfg.restarts = 8
    outcome = svet.maximize(ghz_matrix(), cfg)
    assert outcome.value == pytest.approx(8.0 * ROOT2, abs=1e-6)
    # The certificate must reproduce the reported value exactly.
    assert svet.expectation(ghz_matrix(), outcome.settings) == pytest.approx(
        outcome.value, abs=1e-12
    )


def test_schwarzschild_frozen_value():
    scenario = svet.SchwarzschildScenario()
    scenario.n = 1
    scenario.p = 1
    scenario.q = 0
    scenario.omega = 1.0
    scenario.temperature = 1.0
    scenario.alpha = 1.0 / ROOT2
    result = svet.svetlichny_schwarzschild(scenario)
    assert result.value == pytest.approx(9.673442927140297, abs=1e-12)
    assert result.branch == "coherence"


def test_sds_horizons():
    r_h, r_c = svet.sds_horizons(0.033, 1.0)
    assert r_h == pytest.approx(0.06609625188495995, abs=1e-14)
    assert r_c == pytest.approx(1.69805656878718, abs=1e-14)


def test_error_mapping():
    rho = np.eye(16, dtype=complex) / 16.0
    rho[0, 1] = 0.01  # coherence off the anti-diagonal
    rho[1, 0] = 0.01
    with pytest.raises(svet.SvetError):
        svet.classify_xtype(rho)
