r"""Box-problem physics for the fractional time evolution.

Separable solutions in an infinite well of width a carry the spatial
eigenfunctions :math:`\sqrt{2/a}\,\sin(n\pi x/a)` with eigenvalues
:math:`\lambda_n = -D_\alpha (n\pi/a)^2 < 0`, and the time factor

.. math:: T(t) = E_\alpha(\lambda_n i^\alpha t^\alpha),

which is where every quantity here funnels through
:func:`fracq.mittag_leffler.ml_eval`:

* total probability :math:`|T|^2` (equals 1 at t=0, decays otherwise),
  with its printed small-time and large-time laws;
* energy expectation :math:`\hbar \pi^2 n^2 D_\alpha / a^2 \cdot |T|^2`;
* the complex effective potential

  .. math::

     V(t) = \frac{i^{1+\alpha} \hbar \lambda_n}{t^{1-\alpha}}
            \frac{E_{\alpha,\alpha}(\lambda_n i^\alpha t^\alpha)}
                 {E_\alpha(\lambda_n i^\alpha t^\alpha)}
            + \frac{\hbar^2 \lambda_n}{2 m D_\alpha},

  the potential that makes the ordinary Schrodinger equation reproduce
  the fractional one's wave function;
* the product form rebuilding T from the potential,

  .. math::

     T(t) = e^{\frac{1}{\hbar}\int_0^t V_I}\,
            e^{\frac{i}{\hbar}\left[\frac{\hbar^2 \lambda_n t}{2 m D_\alpha}
               - \int_0^t V_R\right]},

  whose agreement with ml_eval is the module's central cross-check.

The phase integrals carry an integrable :math:`t'^{\alpha-1}` endpoint
singularity; substituting :math:`u = t'^\alpha` removes it analytically
(the singular factor cancels against the Jacobian exactly, see
``_phase_integrand``), after which ordinary adaptive quadrature applies.

Defaults hbar=1, mass=0.5 make :math:`\hbar/2m = 1`, so d_alpha=1 at
alpha=1 is the classical limit with no stray coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad as _quad
from scipy.special import gamma as _gamma

from .errors import DomainError, QuadratureError, SingularityError
from .mittag_leffler import ml_eval, ml_eval_ray
from .special import i_pow

__all__ = [
    "BoxModel",
    "EffectivePotentialSample",
    "box_eigenvalue",
    "box_wavefunction",
    "energy_expectation",
    "energy_product_form",
    "t_product_form",
    "total_probability",
    "total_probability_batch",
    "total_probability_large_t",
    "total_probability_small_t",
    "v_eff",
    "v_eff_series_small_t",
]


@dataclass(frozen=True)
class BoxModel:
    """Infinite well of width a, quantum number n, evolution order alpha,
    quantum diffusion constant d_alpha; hbar and mass default to natural
    units where hbar/(2*mass) = 1."""

    a: float
    n: int
    alpha: float
    d_alpha: float = 1.0
    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self) -> None:
        if not self.a > 0.0:
            raise DomainError(f"a={self.a} must be positive")
        if not (isinstance(self.n, int) and self.n >= 1):
            raise DomainError(f"n={self.n!r} must be a positive integer")
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha={self.alpha} outside (0, 1]")
        if not self.d_alpha > 0.0:
            raise DomainError(f"d_alpha={self.d_alpha} must be positive")
        if not self.hbar > 0.0:
            raise DomainError(f"hbar={self.hbar} must be positive")
        if not self.mass > 0.0:
            raise DomainError(f"mass={self.mass} must be positive")

    @property
    def lam(self) -> float:
        return box_eigenvalue(self)

    @property
    def energy_scale(self) -> float:
        """hbar pi^2 n^2 d_alpha / a^2, the t=0 energy."""
        return self.hbar * math.pi**2 * self.n**2 * self.d_alpha / self.a**2


def box_eigenvalue(model: BoxModel) -> float:
    """lambda_n = -d_alpha (n pi / a)^2; strictly negative."""
    return -model.d_alpha * (model.n * math.pi / model.a) ** 2


def _time_factor(model: BoxModel, t: float) -> complex:
    if t == 0.0:
        return 1.0 + 0.0j
    z = model.lam * i_pow(model.alpha) * t**model.alpha
    return ml_eval(model.alpha, 1.0, z)


def box_wavefunction(model: BoxModel, x: float, t: float) -> complex:
    """sqrt(2/a) sin(n pi x / a) E_alpha(lambda_n i^alpha t^alpha);
    exactly zero on the walls."""
    if not 0.0 <= x <= model.a:
        raise DomainError(f"x={x} outside the box [0, {model.a}]")
    if not t >= 0.0:
        raise DomainError(f"t={t} must be non-negative")
    if x == 0.0 or x == model.a:
        return 0.0 + 0.0j
    spatial = math.sqrt(2.0 / model.a) * math.sin(model.n * math.pi * x / model.a)
    return spatial * _time_factor(model, t)


def total_probability(model: BoxModel, t: float) -> float:
    """|T(t)|^2; equals 1 at t=0 and stays below 1 for alpha < 1."""
    if not t >= 0.0:
        raise DomainError(f"t={t} must be non-negative")
    return abs(_time_factor(model, t)) ** 2


def total_probability_batch(model: BoxModel, ts: np.ndarray) -> np.ndarray:
    """Vectorized |T|^2 over a time grid (t >= 0)."""
    ts = np.asarray(ts, dtype=float)
    if ts.size and not (ts >= 0.0).all():
        raise DomainError("all grid times must be non-negative")
    return np.abs(ml_eval_ray(model.alpha, model.lam, ts)) ** 2


def total_probability_small_t(model: BoxModel, t: float) -> float:
    """Two-term small-time law 1 - 2 cos(alpha pi/2) |lambda| t^alpha
    / (alpha Gamma(alpha)). Validity |lambda| t^alpha << 1 is the
    caller's lookout; the neglected term is O(t^{2 alpha})."""
    if not t >= 0.0:
        raise DomainError(f"t={t} must be non-negative")
    al = model.alpha
    return 1.0 - (
        2.0
        * math.cos(al * math.pi / 2.0)
        * abs(model.lam)
        * t**al
        / (al * _gamma(al))
    )


def total_probability_large_t(model: BoxModel, t: float) -> float:
    """Leading large-time decay 1/(lambda^2 t^{2 alpha}); refuses the
    regime |lambda| t^alpha < 10 where the neglected terms matter."""
    if not t > 0.0:
        raise DomainError(f"t={t} must be positive")
    if abs(model.lam) * t**model.alpha < 10.0:
        raise DomainError(
            f"|lambda| t^alpha = {abs(model.lam) * t ** model.alpha:.3g} < 10: "
            f"outside the validity of the leading-order decay"
        )
    return 1.0 / (model.lam**2 * t ** (2.0 * model.alpha))


def energy_expectation(model: BoxModel, t: float) -> float:
    """hbar pi^2 n^2 d_alpha / a^2 * |T(t)|^2: real, non-negative, and
    constant in t exactly when alpha = 1."""
    return model.energy_scale * total_probability(model, t)


@dataclass(frozen=True)
class EffectivePotentialSample:
    """One evaluation of the complex effective potential."""

    t: float
    v_r: float
    v_i: float

    @property
    def value(self) -> complex:
        return complex(self.v_r, self.v_i)


_DENOM_TOL = 1e-13


def v_eff(model: BoxModel, t: float) -> EffectivePotentialSample:
    """The complex effective potential at t > 0 (module docstring
    formula), split into real and imaginary parts.

    SingularityError when |E_alpha| at the evaluation point falls below
    1e-13: the denominator zero set is never crossed on the physical ray
    with lambda < 0, but off-ray uses can hit it."""
    if not t > 0.0:
        raise DomainError(f"t={t} must be positive")
    al = model.alpha
    lam = model.lam
    z = lam * i_pow(al) * t**al
    e_denom = ml_eval(al, 1.0, z)
    if abs(e_denom) < _DENOM_TOL:
        raise SingularityError(
            f"E_alpha({z!r}) = {e_denom!r} vanishes within tolerance; the "
            f"effective potential has a pole here"
        )
    e_numer = ml_eval(al, al, z)
    prefac = i_pow(1.0 + al) * model.hbar * lam * t ** (al - 1.0)
    value = prefac * (e_numer / e_denom) + model.hbar**2 * lam / (
        2.0 * model.mass * model.d_alpha
    )
    return EffectivePotentialSample(t=t, v_r=value.real, v_i=value.imag)


def v_eff_series_small_t(
    model: BoxModel, t: float, order: int = 2
) -> EffectivePotentialSample:
    """Small-time expansion of the effective potential, reproducing the
    printed two-component series through the t^{2 alpha - 1} terms:

        vR = h^2 lam/(2 m D) - h lam sin(a pi/2) t^{a-1} / Gamma(a)
             - h lam^2 sin(a pi) (1/Gamma(2a) - 1/(Gamma(1+a) Gamma(a)))
               t^{2a-1}
        vI = h^2 lam/(2 m D) - h lam cos(a pi/2) t^{a-1} / Gamma(a)
             + h lam^2 sin(a pi) (1/(Gamma(1+a) Gamma(a))
               + cos(a pi)/Gamma(2a)
               - 2 cos^2(a pi/2)/(Gamma(a) Gamma(1+a))) t^{2a-1}

    order 0 keeps the constants, 1 adds the t^{a-1} terms, 2 adds the
    t^{2a-1} terms.

    Beware: the vR series is the genuine expansion of v_eff, but the vI
    series as printed is not. Its constant term duplicates vR's (making
    vI nonzero at alpha=1 where the exact potential vanishes), and
    expanding the exact ratio gives the t^{a-1} term with the opposite
    sign, +h lam cos(a pi/2) t^{a-1}/Gamma(a). The exact v_eff is the
    authority; this function exists to reproduce the printed series.
    """
    if not t > 0.0:
        raise DomainError(f"t={t} must be positive")
    if order not in (0, 1, 2):
        raise DomainError(f"order={order!r} must be 0, 1, or 2")
    al = model.alpha
    lam = model.lam
    hbar = model.hbar
    const = hbar**2 * lam / (2.0 * model.mass * model.d_alpha)
    v_r = const
    v_i = const
    if order >= 1:
        lead = hbar * lam * t ** (al - 1.0) / _gamma(al)
        v_r -= lead * math.sin(al * math.pi / 2.0)
        v_i -= lead * math.cos(al * math.pi / 2.0)
    if order >= 2:
        quad_t = hbar * lam**2 * math.sin(al * math.pi) * t ** (2.0 * al - 1.0)
        v_r -= quad_t * (1.0 / _gamma(2.0 * al) - 1.0 / (_gamma(1.0 + al) * _gamma(al)))
        v_i += quad_t * (
            1.0 / (_gamma(1.0 + al) * _gamma(al))
            + math.cos(al * math.pi) / _gamma(2.0 * al)
            - 2.0 * math.cos(al * math.pi / 2.0) ** 2 / (_gamma(al) * _gamma(1.0 + al))
        )
    return EffectivePotentialSample(t=t, v_r=v_r, v_i=v_i)


def _phase_integrand(model: BoxModel, u: float) -> complex:
    """Integrand of int_0^t V(t') dt' after the substitution u = t'^alpha.

    The potential's singular factor t'^{alpha-1} times the Jacobian
    (1/alpha) u^{(1-alpha)/alpha} is identically 1/alpha, so the ratio
    term enters with no power of u at all and the integrand is bounded:

        (1/alpha) [ i^{1+alpha} hbar lam E_aa(z)/E_a(z)
                    + C u^{(1-alpha)/alpha} ],   z = lam i^alpha u,
        C = hbar^2 lam / (2 m D).
    """
    al = model.alpha
    lam = model.lam
    z = lam * i_pow(al) * u
    e_denom = ml_eval(al, 1.0, z)
    if abs(e_denom) < _DENOM_TOL:
        raise SingularityError(f"E_alpha vanishes on the phase integral path at u={u}")
    e_numer = ml_eval(al, al, z)
    const = model.hbar**2 * lam / (2.0 * model.mass * model.d_alpha)
    ratio_term = i_pow(1.0 + al) * model.hbar * lam * (e_numer / e_denom)
    return (ratio_term + const * u ** ((1.0 - al) / al)) / al


_QUAD_TOL = 1e-6


def _v_integral(model: BoxModel, t: float) -> complex:
    """int_0^t V(t') dt' via the substituted bounded integrand."""
    u_max = t**model.alpha
    re, re_err = _quad(
        lambda u: _phase_integrand(model, u).real, 0.0, u_max, limit=200
    )
    im, im_err = _quad(
        lambda u: _phase_integrand(model, u).imag, 0.0, u_max, limit=200
    )
    err = math.hypot(re_err, im_err)
    if err > _QUAD_TOL * max(1.0, abs(complex(re, im))):
        raise QuadratureError(
            f"phase integral error estimate {err:.3e} exceeds {_QUAD_TOL:g} "
            f"at alpha={model.alpha}, t={t}"
        )
    return complex(re, im)


def t_product_form(model: BoxModel, t: float) -> complex:
    """T(t) rebuilt as the product of its decaying and oscillating parts
    (module docstring formula). Must agree with the direct ml_eval
    evaluation; the phase integral runs at 1e-6 tolerance."""
    if not t > 0.0:
        raise DomainError(f"t={t} must be positive")
    v_int = _v_integral(model, t)
    hbar = model.hbar
    decay = math.exp(v_int.imag / hbar)
    phase = (
        hbar * model.lam * t / (2.0 * model.mass * model.d_alpha)
        - v_int.real / hbar
    )
    return decay * complex(math.cos(phase), math.sin(phase))


def energy_product_form(model: BoxModel, t: float) -> float:
    """Energy through the dissipation integral,
    (hbar pi^2 d_alpha n^2 / a^2) exp((2/hbar) int_0^t v_I);
    agrees with energy_expectation to the quadrature tolerance."""
    if not t > 0.0:
        raise DomainError(f"t={t} must be positive")
    v_int = _v_integral(model, t)
    return model.energy_scale * math.exp(2.0 * v_int.imag / model.hbar)
