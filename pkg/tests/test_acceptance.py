r"""The thirteen acceptance criteria, one test each.

Every test prints its criterion's measured-vs-tolerance line and asserts
the criterion passed. Criterion 5 is expected to fail: the two-term
small-time probability law cannot meet a 1% pointwise bound (relative to
the deviation from 1) across all of t in [1e-4, 1e-2], because the
neglected O(t^{2 alpha}) term is ~8% of the deviation at the window top
(measured ratio 8.3e-2, scaling like t^alpha; the bound holds only below
t ~ 2e-4). The criterion is implemented faithfully and left red rather
than silently loosened; see the failure message for the measured value.
"""

from fracq.acceptance import (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
    criterion_13,
)


def _check(result):
    line = result.line()
    print(line)
    assert result.passed, line


def test_c01_euler_limit():
    """alpha=1, lambda in {-1,-4}, 200 points on [0,10]: |T - e^{i lambda t}|
    within 1e-12."""
    _check(criterion_1())


def test_c02_pole_plus_integral_route():
    """alpha in {0.3,0.5,0.7} x lambda in {-1,-4} x t in {0.1,...,5}: the
    contour decomposition matches the series evaluation within 1e-6."""
    _check(criterion_2())


def test_c03_contour_inversion():
    """Numerical inverse transform vs 60-digit series, 20 log-spaced t in
    [0.01, 10], alpha in {0.3, 0.5, 0.9}: within 1e-8."""
    _check(criterion_3())


def test_c04_h_function_representation():
    """H-block evaluation at -z vs the high-precision series on 64 points
    with |z| <= 2, alpha in {0.3, 0.5, 1/sqrt(2)}: within 1e-9."""
    _check(criterion_4())


def test_c05_small_time_law():
    """Two-term law vs exact |T|^2 on t in [1e-4, 1e-2], pointwise within
    1% of the deviation from 1. Expected red; see the module docstring."""
    _check(criterion_5())


def test_c06_large_time_coefficient():
    """lambda^2 t^{2 alpha} |T|^2 in [0.98, 1.02] at t = 1e4 through the
    asymptotic-backed evaluation path."""
    _check(criterion_6())


def test_c07_probability_bound():
    """P(t) <= 1 + 1e-10 over 10^4 points, alpha in {0.3,...,0.9},
    n in {1,2,3}."""
    _check(criterion_7())


def test_c08_product_form():
    """Decay-times-phase product vs direct evaluation, 50 points on (0,2],
    alpha in {0.5, 0.7}: within 1e-4."""
    _check(criterion_8())


def test_c09_classical_effective_potential():
    """alpha=1 with D_1 = hbar/2m: |v_eff| below 1e-8 on [0.1, 10]."""
    _check(criterion_9())


def test_c10_energy_consistency():
    """Dissipation-integral energy vs direct expectation, relative 1e-4 on
    (0, 2]."""
    _check(criterion_10())


def test_c11_branch_conjugation():
    """|E_alpha(lambda (-i)^a t^a)| equals |E_alpha(lambda i^a t^a)| within
    1e-12 on the standard lattice."""
    _check(criterion_11())


def test_c12_operator_checks():
    """Caputo exactness on constants/linears, L1 order >= 1.4, Riesz q=2
    vs the spectral second derivative, and composition-identity refinement
    order >= 1 - alpha + 0.4 at alpha in {0.5, 0.7}."""
    _check(criterion_12())


def test_c13_eigen_relation():
    """Discrete Caputo derivative of the sampled time factor vs
    i^a lambda T, relative 5e-3 on the settled half of a 4096-cell grid."""
    _check(criterion_13())
