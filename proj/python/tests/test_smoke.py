import json
import math

import numpy as np
import pytest

import fracineq

L = 16.0


def mode(k, n=128):
    x = -L / 2 + np.arange(n) * L / n
    return np.cos(2 * math.pi * k * x / L)


def test_fractional_laplacian_scales_a_mode():
    f = mode(3)
    xi = 2 * math.pi * 3 / L
    np.testing.assert_allclose(fracineq.fractional_laplacian(f, L, 0.5), xi**0.5 * f, atol=1e-12)


def test_riesz_potential_inverts_fractional_laplacian():
    f = fracineq.sample_random_band_limited(1, L, 128, 7, 10)
    back = fracineq.riesz_potential(fracineq.fractional_laplacian(f, L, 0.4), L, 0.4)
    np.testing.assert_allclose(back, f - f.mean(), atol=1e-12)


def test_two_dimensional_fields():
    f = fracineq.sample_gaussian(2, L, 32, 1.0)
    assert f.shape == (32, 32)
    m = fracineq.hl_maximal(f, L)
    assert np.all(m >= np.abs(f))


def test_luxemburg_constant_and_table_agree():
    f = fracineq.sample_random_band_limited(1, L, 64, 3, 6)
    a = fracineq.luxemburg_norm(f, L, 2.0)
    b = fracineq.luxemburg_norm(f, L, np.full(64, 2.0))
    assert a == pytest.approx(fracineq.lp_norm(f, L, 2.0), rel=1e-12)
    assert a == pytest.approx(b, rel=1e-15)


def test_orlicz_power_matches_lebesgue():
    f = fracineq.sample_gaussian(1, L, 64, 0.8)
    assert fracineq.orlicz_norm(f, L, "power", p=3.0) == pytest.approx(fracineq.lp_norm(f, L, 3.0), rel=1e-10)


def test_exponent_relations():
    assert fracineq.sobolev_conjugate(4, 1, 2) == pytest.approx(4.0)
    assert fracineq.hedberg_theta(0.25, 0.0, 0.25) == pytest.approx(0.5)
    assert fracineq.sigma_exponent(3, 0.5, 2, 4) == pytest.approx(6.0)


def test_run_config_and_gate_errors():
    cfg = {"cases": [{"id": "t2", "theorem": "theorem2", "s": 0.25, "beta": 0.25, "p": 2}]}
    (report,) = fracineq.run_config(json.dumps(cfg))
    assert report["case_id"] == "t2"
    assert report["theta"] == pytest.approx(0.5)
    assert report["pass"]
    bad = {"cases": [{"theorem": "theorem1", "s": 0.4, "s1": 0.6, "beta": 1}]}
    with pytest.raises(fracineq.GateError):
        fracineq.run_config(json.dumps(bad))


def test_bad_shapes_rejected():
    with pytest.raises(ValueError):
        fracineq.hl_maximal(np.zeros((4, 8)), L)
