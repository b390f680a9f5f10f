r"""Box model: wavefunction, total probability, energy, effective
potential, and the product form.

Frozen references: the t=0.01 probability and the t=1 effective potential
come from 200-digit direct evaluations of the defining formulas; the
small-time law value is the closed form 1 - 2 cos(a pi/2)|l| t^a/(a Gamma(a)).
"""

import cmath
import math

import numpy as np
import pytest

from fracq import (
    BoxModel,
    DomainError,
    box_eigenvalue,
    box_wavefunction,
    energy_expectation,
    energy_product_form,
    t_product_form,
    total_probability,
    total_probability_batch,
    total_probability_large_t,
    total_probability_small_t,
    v_eff,
    v_eff_series_small_t,
)

HALF = BoxModel(a=math.pi, n=1, alpha=0.5)
CLASSIC = BoxModel(a=math.pi, n=1, alpha=1.0)

P_001 = 0.8526250466309984  # |T(0.5,-1,0.01)|^2, 200-digit oracle
VEFF_1 = -0.8586144612420974 - 0.32738812043989757j  # v_eff at t=1, 200-digit oracle


def test_eigenvalues():
    assert HALF.lam == pytest.approx(-1.0, abs=1e-15)
    assert box_eigenvalue(BoxModel(a=math.pi, n=2, alpha=0.5)) == pytest.approx(-4.0, abs=1e-14)
    assert box_eigenvalue(BoxModel(a=1.0, n=1, alpha=0.5)) == pytest.approx(
        -math.pi**2, rel=1e-15
    )


def test_model_validation():
    with pytest.raises(DomainError):
        BoxModel(a=0.0, n=1, alpha=0.5)
    with pytest.raises(DomainError):
        BoxModel(a=1.0, n=0, alpha=0.5)
    with pytest.raises(DomainError):
        BoxModel(a=1.0, n=1, alpha=1.2)
    with pytest.raises(DomainError):
        BoxModel(a=1.0, n=1, alpha=0.5, d_alpha=-1.0)


def test_wavefunction_nodes_and_peak():
    assert box_wavefunction(HALF, 0.0, 0.3) == 0j
    assert box_wavefunction(HALF, math.pi, 0.3) == 0j
    peak = box_wavefunction(HALF, math.pi / 2.0, 0.0)
    assert peak == pytest.approx(math.sqrt(2.0 / math.pi), abs=1e-15)


def test_wavefunction_classical_limit():
    x, t = 1.1, 3.7
    got = box_wavefunction(CLASSIC, x, t)
    ref = math.sqrt(2.0 / math.pi) * math.sin(x) * cmath.exp(-1j * t)
    assert abs(got - ref) < 1e-14


def test_wavefunction_domain():
    with pytest.raises(DomainError):
        box_wavefunction(HALF, -0.1, 1.0)
    with pytest.raises(DomainError):
        box_wavefunction(HALF, 4.0, 1.0)
    with pytest.raises(DomainError):
        box_wavefunction(HALF, 1.0, -1.0)


def test_probability_initial_and_classical():
    assert total_probability(HALF, 0.0) == 1.0
    assert total_probability(CLASSIC, 7.0) == pytest.approx(1.0, abs=1e-13)


def test_probability_frozen_small_time():
    assert total_probability(HALF, 0.01) == pytest.approx(P_001, abs=1e-13)


def test_probability_batch_matches_scalar():
    ts = np.array([0.0, 0.01, 0.5, 3.0, 50.0, 400.0])
    batch = total_probability_batch(HALF, ts)
    for t, p in zip(ts[1:], batch[1:]):
        assert p == pytest.approx(total_probability(HALF, float(t)), rel=5e-9)


def test_small_time_law_closed_form():
    t = 0.01
    law = 1.0 - 2.0 * math.cos(math.pi / 4.0) * t**0.5 / (0.5 * math.gamma(0.5))
    assert law == pytest.approx(0.8404230878394269, abs=1e-15)
    assert total_probability_small_t(HALF, t) == pytest.approx(law, abs=1e-15)


def test_large_time_law_and_validity():
    assert total_probability_large_t(HALF, 1e4) == pytest.approx(1e-4, rel=1e-12)
    with pytest.raises(DomainError):
        total_probability_large_t(HALF, 50.0)  # |lambda| t^alpha < 10


def test_large_time_coefficient():
    t = 1e4
    value = HALF.lam**2 * t * total_probability(HALF, t)
    assert value == pytest.approx(0.9920525864977534, abs=1e-10)


def test_energy_scale_and_classical_constancy():
    assert HALF.energy_scale == pytest.approx(1.0, abs=1e-15)
    assert energy_expectation(HALF, 0.0) == pytest.approx(1.0, abs=1e-15)
    for t in (0.5, 2.0, 9.0):
        assert energy_expectation(CLASSIC, t) == pytest.approx(
            CLASSIC.energy_scale, rel=1e-12
        )


def test_veff_frozen_value():
    s = v_eff(HALF, 1.0)
    assert abs(s.value - VEFF_1) < 1e-12
    assert s.v_r == s.value.real and s.v_i == s.value.imag


def test_veff_classical_limit_vanishes():
    for t in (0.1, 1.0, 10.0):
        assert abs(v_eff(CLASSIC, t).value) < 1e-10


def test_veff_domain():
    with pytest.raises(DomainError):
        v_eff(HALF, 0.0)
    with pytest.raises(DomainError):
        v_eff(HALF, -1.0)


def test_veff_series_order_zero_constant():
    s = v_eff_series_small_t(HALF, 0.37, order=0)
    assert (s.v_r, s.v_i) == (-1.0, -1.0)
    with pytest.raises(DomainError):
        v_eff_series_small_t(HALF, 0.1, order=3)


def test_veff_series_real_part_refines():
    # the real-part series carries a genuine O(t^{3a-1}) remainder; for
    # alpha=1/2 halving t by 10 should shrink the defect by ~10^{-1/2}
    errs = []
    for t in (0.1, 0.01, 0.001):
        exact = v_eff(HALF, t).v_r
        series = v_eff_series_small_t(HALF, t, order=2).v_r
        errs.append(abs(series - exact))
    for e0, e1 in zip(errs, errs[1:]):
        assert 0.2 < e1 / e0 < 0.45, errs


def test_product_form_classical():
    for t in (0.3, 1.0, 4.0):
        assert abs(t_product_form(CLASSIC, t) - cmath.exp(-1j * t)) < 1e-12


def test_product_form_matches_series_route():
    from fracq import i_pow, ml_eval

    for t in (0.25, 1.0, 2.0):
        got = t_product_form(HALF, t)
        ref = ml_eval(0.5, 1.0, HALF.lam * i_pow(0.5) * t**0.5)
        assert abs(got - ref) < 1e-9


def test_energy_product_form_matches_expectation():
    for t in (0.1, 0.7, 2.0):
        a = energy_product_form(HALF, t)
        b = energy_expectation(HALF, t)
        assert a == pytest.approx(b, rel=1e-8)


def test_energy_product_form_initial_limit():
    got = energy_product_form(HALF, 1e-8)
    assert got == pytest.approx(HALF.energy_scale, abs=1e-3)


def test_wavefunction_normalization_tracks_probability():
    # integral of |psi|^2 over the box equals |T|^2 at any t
    from scipy.integrate import simpson

    t = 0.5
    x = np.linspace(0.0, math.pi, 2001)
    dens = np.array([abs(box_wavefunction(HALF, float(xx), t)) ** 2 for xx in x])
    integral = simpson(dens, x=x)
    assert integral == pytest.approx(total_probability(HALF, t), abs=1e-10)
