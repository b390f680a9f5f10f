r"""Two-parameter Mittag-Leffler evaluation.

Frozen references are 60-digit mpmath sums of z^k / Gamma(alpha k + beta);
E_{1/2} values are additionally pinned by the closed form
E_{1/2}(z) = exp(z^2) erfc(-z).
"""

import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from fracq import DomainError, ml_asymptotic, ml_eval, ml_eval_ray, ml_real_imag, ml_series

# 60-digit mpmath, frozen
E05_M1 = 0.4275835761558070044107503  # E_{1/2}(-1) = e erfc(1)
E05_MI = 0.3678794411714423215955238 - 0.6071577058413937291150382j
E07_Z0 = 1.363205921193084321360319 + 0.3402748582537432517383854j  # E_{0.7}(0.3+0.2j)
E03B2_M2 = 0.3603766435540464263444108  # E_{0.3,2}(-2)
T_05_M1_T01 = 0.7601649887165771107930514 - 0.1686090946724721142549083j
T_05_M1_T1 = 0.4155880959078486612483405 - 0.2303197875549106396795349j


def test_series_frozen_values():
    assert abs(ml_series(0.5, 1.0, -1.0).value - E05_M1) < 1e-14
    assert abs(ml_series(0.5, 1.0, -1j).value - E05_MI) < 1e-14
    assert abs(ml_series(0.7, 1.0, 0.3 + 0.2j).value - E07_Z0) < 1e-14
    # 167 alternating terms in plain double arithmetic: allow the rounding
    assert abs(ml_series(0.3, 2.0, -2.0).value - E03B2_M2) < 5e-12


def test_series_reports_term_count():
    r = ml_series(1.0, 1.0, 1.0)
    assert abs(r.value - math.e) < 1e-14
    assert 10 < r.terms < 40


def test_series_domain_gates():
    with pytest.raises(DomainError):
        ml_series(0.5, 1.0, 11.0)
    with pytest.raises(DomainError):
        ml_series(0.5, 1.0, 1.0, tol=1e-16)
    with pytest.raises(DomainError):
        ml_series(1.3, 1.0, 1.0)
    with pytest.raises(DomainError):
        ml_series(0.5, 0.0, 1.0)


def test_eval_alpha_one_is_exp():
    for z in (0.3, -2.0, 1j, -0.5 + 2.5j, 20.0 + 3j):
        assert abs(ml_eval(1.0, 1.0, z) - cmath.exp(z)) < 1e-13 * abs(cmath.exp(z))


def test_eval_beta_two_alpha_one():
    # E_{1,2}(z) = (e^z - 1)/z
    for z in (0.7, -1.5, 0.4 - 0.9j):
        ref = (cmath.exp(z) - 1.0) / z
        assert abs(ml_eval(1.0, 2.0, z) - ref) < 1e-12 * abs(ref)


def test_eval_frozen_time_factors():
    half = cmath.exp(1j * math.pi / 4)
    assert abs(ml_eval(0.5, 1.0, -half * math.sqrt(0.1)) - T_05_M1_T01) < 1e-13
    assert abs(ml_eval(0.5, 1.0, -half) - T_05_M1_T1) < 1e-13


def test_real_imag_decomposition_frozen():
    d = ml_real_imag(0.5, -1.0, 0.1)
    assert d.e_r == pytest.approx(T_05_M1_T01.real, abs=1e-13)
    assert d.e_i == pytest.approx(T_05_M1_T01.imag, abs=1e-13)


def test_asymptotic_leading_term_convention():
    # the convention fixed by the large-time acceptance window: leading -1/z
    for z in (40.0 + 3j, -25.0, 60j):
        assert abs(ml_asymptotic(0.5, z, 1) + 1.0 / z) < 1e-16


def test_asymptotic_gates():
    with pytest.raises(DomainError):
        ml_asymptotic(0.5, 3.0, 2)  # |z| too small
    with pytest.raises(DomainError):
        ml_asymptotic(0.5, 40.0, 0)
    with pytest.raises(DomainError):
        ml_asymptotic(0.5, 40.0, 100)  # beyond floor(1/alpha) + 5


def test_eval_tail_matches_asymptotic_convention():
    from scipy.special import rgamma  # rgamma(non-positive int) = 0

    alpha = 0.5
    z = -30.0 * cmath.exp(1j * math.pi / 4)
    n_terms = math.floor(1.0 / alpha) + 5  # the dispatcher's truncation depth
    full = sum(-(z ** -(1 + nu)) * rgamma(1.0 - nu * alpha) for nu in range(n_terms))
    got = ml_eval(alpha, 1.0, z)
    assert abs(got - full) < 1e-12 * abs(full)
    assert abs(got - ml_asymptotic(alpha, z, n_terms)) == 0.0


def test_ray_matches_scalar_across_regimes():
    # t spans Taylor, bridge, and tail dispatch for alpha=0.5, lambda=-1
    ts = np.array([0.0, 0.5, 2.0, 8.0, 20.0, 100.0, 180.0, 300.0, 1000.0])
    batch = ml_eval_ray(0.5, -1.0, ts)
    assert abs(batch[0] - 1.0) < 1e-15  # Lanczos 1/Gamma(1) rounding
    half = cmath.exp(1j * math.pi / 4)
    for t, got in zip(ts[1:], batch[1:]):
        ref = ml_eval(0.5, 1.0, -half * t**0.5)
        assert abs(got - ref) <= 2e-9 * max(abs(ref), 1e-30), f"t={t}"


def test_ray_alpha_one_exact():
    ts = np.linspace(0.0, 50.0, 101)
    assert np.array_equal(ml_eval_ray(1.0, -2.0, ts), np.exp(-2j * ts))


def test_ray_rejects_negative_t():
    with pytest.raises(DomainError):
        ml_eval_ray(0.5, -1.0, np.array([-0.1, 1.0]))


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([0.35, 0.5, 0.8, 1.0]),
    st.complex_numbers(max_magnitude=6.0, allow_nan=False, allow_infinity=False),
)
def test_conjugate_symmetry(alpha, z):
    a = ml_eval(alpha, 1.0, z)
    b = ml_eval(alpha, 1.0, z.conjugate())
    assert abs(a - b.conjugate()) <= 1e-9 * max(abs(a), 1.0)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([0.4, 0.6, 0.9]),
    st.floats(min_value=0.6, max_value=2.0),
    st.complex_numbers(max_magnitude=4.0, allow_nan=False, allow_infinity=False),
)
def test_index_shift_identity(alpha, beta, z):
    # E_{a,b}(z) = 1/Gamma(b) + z E_{a,b+a}(z), probed in the Taylor regime
    # (in the exponential-growth direction the bridge quadrature's absolute
    # error makes a relative bound this tight meaningless)
    assume(abs(z) ** (1.0 / alpha) <= 11.0)
    lhs = ml_eval(alpha, beta, z)
    rhs = 1.0 / math.gamma(beta) + z * ml_eval(alpha, beta + alpha, z)
    assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), 1.0)
