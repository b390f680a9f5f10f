r"""Fox H-function machinery: parameter validation, convergence
classification, residue series, argument inversion, and the
parameter-level transform images.

The H-representation of the Mittag-Leffler function is pinned against
60-digit reference values; the binomial kernel
H^{1,1}_{1,1}(z | (1-s,1); (0,1)) = Gamma(s) (1+z)^{-s} gives an
independent closed form exercising both expansion sides of a mu = 0
(disk/exterior split) case.
"""

import cmath
import math

import pytest

from fracq import (
    DomainError,
    HFunctionParams,
    HVerdict,
    ParamError,
    PoleSide,
    RegionError,
    UnsupportedError,
    h_check_simple_poles,
    h_classify,
    h_eval,
    h_invert_argument,
    h_laplace_params,
    h_parse,
    h_rl_derivative_params,
    h_serialize,
    h_series_expansion_I,
    h_series_expansion_II,
    ml_h_params,
)

E05_M1 = 0.4275835761558070044107503  # E_{1/2}(-1)
E05_P1 = 5.008980080762283466309825  # E_{1/2}(+1)
E07_Z0 = 1.363205921193084321360319 + 0.3402748582537432517383854j  # E_{0.7}(0.3+0.2j)

BINOM = HFunctionParams(1, 1, 1, 1, upper=((0.3, 1.0),), lower=((0.0, 1.0),))
EXP_INV = HFunctionParams(0, 1, 1, 0, upper=((1.0, 1.0),), lower=())


def test_params_validation():
    with pytest.raises(ParamError):
        HFunctionParams(1, 2, 1, 2, upper=((0.0, 1.0),), lower=((0.0, 1.0), (0.0, 0.5)))
    with pytest.raises(ParamError):
        HFunctionParams(3, 0, 0, 2, upper=(), lower=((0.0, 1.0), (0.0, 0.5)))
    with pytest.raises(ParamError):
        HFunctionParams(1, 0, 0, 2, upper=(), lower=((0.0, 1.0),))  # length != q
    with pytest.raises(ParamError):
        HFunctionParams(1, 0, 0, 1, upper=(), lower=((0.0, -1.0),))  # slope <= 0
    with pytest.raises(ParamError):
        HFunctionParams(1, 0, 0, 1, upper=(), lower=((0.0, 0.0),))


def test_params_separation_condition():
    # upper pole lattice of Gamma(1 - a + A s) colliding with the lower one
    with pytest.raises(ParamError):
        HFunctionParams(1, 1, 1, 1, upper=((1.0, 1.0),), lower=((0.0, 1.0),))


def test_classify_ml_params():
    cls = h_classify(ml_h_params(0.5))
    assert cls.verdict is HVerdict.ALL_Z
    assert cls.mu == pytest.approx(0.5, abs=1e-15)


def test_classify_disk_only():
    cls = h_classify(BINOM)
    assert cls.verdict is HVerdict.DISK_ONLY
    assert cls.mu == 0.0
    assert cls.beta_star == pytest.approx(1.0, abs=1e-15)


def test_classify_exterior_only():
    cls = h_classify(EXP_INV)
    assert cls.verdict is HVerdict.EXTERIOR_ONLY
    assert cls.mu == pytest.approx(-1.0, abs=1e-15)


def test_simple_pole_detection():
    assert h_check_simple_poles(ml_h_params(1.0 / math.sqrt(2.0)), PoleSide.LOWER)
    # two coincident lower lattices (0,1),(0,1) inside the m-group
    doubled = HFunctionParams(
        2, 0, 0, 2, upper=(), lower=((0.0, 1.0), (0.0, 1.0))
    )
    assert not h_check_simple_poles(doubled, PoleSide.LOWER)
    # rational slope ratio: -nu and -nu'/0.5 coincide at nu = 2
    halved = HFunctionParams(
        2, 0, 0, 2, upper=(), lower=((0.0, 1.0), (0.0, 0.5))
    )
    assert not h_check_simple_poles(halved, PoleSide.LOWER)
    # irrational slope ratio with distinct offsets: -0.3 - nu never meets
    # -sqrt(2) nu' within the scan depth (b = 0 for both would share s = 0)
    irr = HFunctionParams(
        2, 0, 0, 2, upper=(), lower=((0.3, 1.0), (0.0, 1.0 / math.sqrt(2.0)))
    )
    assert h_check_simple_poles(irr, PoleSide.LOWER)


def test_exponential_series():
    p = HFunctionParams(1, 0, 0, 1, upper=(), lower=((0.0, 1.0),))
    for z in (0.5, 2.0, 1.0 - 0.7j):
        assert abs(h_series_expansion_I(p, z, 1e-14) - cmath.exp(-z)) < 1e-13


def test_ml_representation_frozen():
    # H^{1,1}_{1,2}(-z) with the ML parameter block equals E_alpha(z)
    assert abs(h_eval(ml_h_params(0.5), 1.0) - E05_M1) < 1e-12
    assert abs(h_eval(ml_h_params(0.5), -1.0) - E05_P1) < 1e-11 * E05_P1
    assert abs(h_eval(ml_h_params(0.7), -(0.3 + 0.2j)) - E07_Z0) < 1e-12 * abs(E07_Z0)


def test_binomial_kernel_both_sides():
    # Gamma(0.7) (1+z)^{-0.7}: series I inside |z|<1, series II outside
    g = math.gamma(0.7)
    for z in (0.4, 0.3 + 0.5j, -0.2 - 0.3j):
        ref = g * (1.0 + z) ** -0.7
        assert abs(h_eval(BINOM, z) - ref) < 1e-13
    for z in (2.5, 1.5 - 2.0j, -0.5 + 3.0j):
        ref = g * (1.0 + z) ** -0.7
        assert abs(h_eval(BINOM, z) - ref) < 1e-13


def test_disk_boundary_ring_unsupported():
    with pytest.raises(UnsupportedError):
        h_eval(BINOM, cmath.exp(0.3j))  # |z| = 1 exactly
    with pytest.raises(UnsupportedError):
        h_eval(BINOM, 1.0 + 1e-9)  # inside the 1e-6 ring guard


def test_region_gates():
    with pytest.raises(DomainError):
        h_eval(ml_h_params(0.5), 0.0)
    with pytest.raises(RegionError):
        h_series_expansion_I(BINOM, 2.0, 1e-12)  # outside the disk
    with pytest.raises(RegionError):
        h_series_expansion_II(BINOM, 0.5, 1e-12)  # inside the disk
    with pytest.raises(RegionError):
        h_series_expansion_I(EXP_INV, 0.5, 1e-12)  # m = 0: no lower poles
    with pytest.raises(RegionError):
        h_series_expansion_II(ml_h_params(0.5), 1.0, 1e-12)  # converges everywhere
    with pytest.raises(DomainError):
        h_series_expansion_I(ml_h_params(0.5), 1.0, 1e-16)  # tol below floor


def test_invert_argument_images():
    inv = h_invert_argument(ml_h_params(0.5))
    assert (inv.m, inv.n, inv.p, inv.q) == (1, 1, 2, 1)
    assert inv.upper == ((1.0, 1.0), (1.0, 0.5))
    assert inv.lower == ((1.0, 1.0),)
    # involution
    back = h_invert_argument(inv)
    assert back == ml_h_params(0.5)


def test_invert_argument_identity():
    p = ml_h_params(0.5)
    inv = h_invert_argument(p)
    for z in (0.7, 1.0 + 0.4j, -2.0 + 0.1j):
        a = h_eval(p, z)
        b = h_eval(inv, 1.0 / z)
        assert abs(a - b) < 1e-12 * max(abs(a), 1.0)


def test_invert_exponential_image():
    # e^{-z} inverts to an m=0 block evaluated by the descending series
    p = HFunctionParams(1, 0, 0, 1, upper=(), lower=((0.0, 1.0),))
    inv = h_invert_argument(p)
    assert (inv.m, inv.n, inv.p, inv.q) == (0, 1, 1, 0)
    for w in (0.4, 2.0, 1.0 + 1.0j):
        assert abs(h_eval(inv, w) - cmath.exp(-1.0 / w)) < 1e-13


def test_rl_derivative_params_image():
    image, exponent = h_rl_derivative_params(ml_h_params(0.5), 0.0, 1.0, 0.5, 1.0)
    assert exponent == -0.5
    assert (image.m, image.n, image.p, image.q) == (1, 2, 2, 3)
    assert image.upper == ((0.0, 1.0), (0.0, 1.0))
    assert image.lower == ((0.0, 1.0), (0.0, 0.5), (0.5, 1.0))


def test_rl_derivative_params_validation():
    with pytest.raises(ParamError):
        h_rl_derivative_params(ml_h_params(0.5), 0.0, 0.0, 0.5, 1.0)  # b_exp <= 0
    with pytest.raises(ParamError):
        # a_exp + b_exp * min Re(b_j / B_j) must stay above -1
        h_rl_derivative_params(ml_h_params(0.5), -1.5, 1.0, 0.5, 1.0)


def test_laplace_params_image():
    image = h_laplace_params(ml_h_params(0.5), 0.5, 1.0)
    assert (image.m, image.n, image.p, image.q) == (1, 2, 2, 2)
    assert image.upper == ((0.5, 1.0), (0.0, 1.0))
    assert image.lower == ((0.0, 1.0), (0.0, 0.5))
    with pytest.raises(ParamError):
        h_laplace_params(ml_h_params(0.5), 0.5, 0.0)  # sigma <= 0


def test_serialize_round_trip():
    for p in (ml_h_params(0.5), BINOM, EXP_INV, h_invert_argument(ml_h_params(0.7))):
        text = h_serialize(p)
        assert h_parse(text) == p


def test_parse_spec_form():
    p = h_parse("H[1,1,1,2] upper=(0,1) lower=(0,1);(0,0.5)")
    assert p == ml_h_params(0.5)


def test_parse_rejects_malformed():
    for text in (
        "H[1,1,1] upper=(0,1) lower=(0,1)",
        "H[1,1,1,2] upper=(0,1)",
        "H[1,1,1,2] upper=(0,1) lower=(0;1)",
        "garbage",
    ):
        with pytest.raises(ParamError):
            h_parse(text)


def test_mu_zero_interior_value():
    # Gamma(0.7) 1.5^{-0.7}, frozen closed form
    got = h_eval(BINOM, 0.5)
    assert abs(got - math.gamma(0.7) * 1.5**-0.7) < 1e-14
