r"""Independent high-precision reference routes for the time factor
:math:`T(t) = E_\alpha(\lambda i^\alpha t^\alpha)`.

Nothing here shares quadrature nodes, series truncation logic, or contour
machinery with :mod:`fracq.mittag_leffler`; these are the cross-checks the
test suite freezes values from.

Routes:

* ``ml_highprec``: the defining power series summed in mpmath at a caller
  chosen number of digits.
* ``bromwich_invert``: numerical inversion of the Laplace transform
  :math:`s^{\alpha-1}/(s^\alpha - \sigma)` on a deformed (cotangent) contour,
  with explicit bookkeeping of the pole :math:`s_2 = \sigma^{1/\alpha}` when
  the contour fails to enclose it.
* ``f_alpha_quadrature``: the branch-cut integral

  .. math::

     F_\alpha(\sigma; t) = \frac{\sigma \sin\alpha\pi}{\alpha\pi} \int_0^\infty
        \frac{e^{-u^{1/\alpha} t}}{u^2 - 2\sigma u\cos\alpha\pi + \sigma^2}
        \, du

  (already in the ``u = x**alpha`` substituted form) via adaptive mpmath
  quadrature.
* ``f_alpha_series``: the same :math:`F_\alpha` recovered from the series
  route through the decomposition :math:`T = (\text{pole term}) - F_\alpha`.

On the pole term. The transform :math:`s^{\alpha-1}/(s^\alpha-\sigma)` has a
principal-sheet pole :math:`s_2 = \sigma^{1/\alpha}` iff
:math:`|\arg\sigma| < \alpha\pi`. With :math:`\sigma = \lambda i^\alpha` and
:math:`\lambda < 0` the argument is :math:`\alpha\pi/2 - \pi`, so the pole
exists exactly for :math:`\alpha > 2/3`, and there
:math:`s_2 = i\,|\lambda|^{1/\alpha} e^{-i\pi/\alpha}`, i.e. the root
:math:`\lambda^{1/\alpha}` taken with the *minus* branch rotation. That is
the hard-coded sign resolution; the plus branch (which disagrees with the
quadrature by exactly :math:`|e^{s_2 t}|/\alpha` for :math:`\alpha \le 2/3`)
is kept behind a diagnostic flag.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import (
    ContourError,
    ConvergenceError,
    DomainError,
    PoleOnPathError,
    QuadratureError,
)
from .special import _warn_excluded_alpha, neg_lambda_root

__all__ = [
    "BromwichConfig",
    "FAlphaQuery",
    "InversionMethod",
    "bromwich_invert",
    "f_alpha_quadrature",
    "f_alpha_series",
    "ml_highprec",
    "t_via_pole_plus_integral",
]


@dataclass(frozen=True)
class FAlphaQuery:
    """Point query for the branch-cut function F_alpha(sigma; t), lam < 0."""

    alpha: float
    lam: float
    t: float

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha={self.alpha} outside (0, 1)")
        if not self.lam < 0.0:
            raise DomainError(f"lam={self.lam} must be negative")
        if not self.t > 0.0:
            raise DomainError(f"t={self.t} must be positive")

    @property
    def sigma(self) -> complex:
        half = 0.5 * math.pi * self.alpha
        return self.lam * complex(math.cos(half), math.sin(half))


class InversionMethod(enum.Enum):
    DEFORMED_CONTOUR = "deformed-contour"


@dataclass(frozen=True)
class BromwichConfig:
    """Contour inversion settings.

    ``gamma_abscissa`` is the Bromwich offset; it must clear every
    singularity of the transform (checked against |lam|**(1/alpha) at
    inversion time). The deformed contour does not evaluate on the vertical
    line, so the abscissa is validated but not otherwise consumed. ``None``
    means choose it automatically.
    """

    gamma_abscissa: float | None = None
    nodes: int = 48
    method: InversionMethod = InversionMethod.DEFORMED_CONTOUR

    def __post_init__(self) -> None:
        if self.gamma_abscissa is not None and not self.gamma_abscissa > 0.0:
            raise DomainError(f"gamma_abscissa={self.gamma_abscissa} must be positive")
        if self.nodes < 8 or self.nodes % 2:
            raise DomainError(f"nodes={self.nodes} must be even and >= 8")


def ml_highprec(alpha: float, beta: float, z: complex, digits: int = 50) -> mp.mpc:
    """E_{alpha,beta}(z) by direct series summation at ``digits`` working
    digits plus a cancellation guard. Returns an mpmath complex so callers
    can compare runs at different precisions digit for digit."""
    if not 50 <= digits <= 500:
        raise DomainError(f"digits={digits} outside [50, 500]")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    if not beta > 0.0:
        raise DomainError(f"beta={beta} must be positive")
    z = complex(z)
    if abs(z) > 30.0:
        raise DomainError(f"|z|={abs(z):.3g} > 30: series route not trusted this far out")
    guard = int(0.4343 * abs(z) ** (1.0 / alpha)) + 15
    if guard > 400:
        raise ConvergenceError(
            f"series route needs ~{guard} guard digits at |z|={abs(z):.3g}, "
            f"alpha={alpha}; use bromwich_invert for this regime, the contour "
            f"has no cancellation"
        )
    with mp.workdps(digits + guard):
        # promote orders before forming alpha*k: double rounding in the
        # gamma argument gets amplified by the cancellation here
        al = mp.mpf(alpha)
        be = mp.mpf(beta)
        zz = mp.mpc(z)
        partial = mp.mpc(0)
        zpow = mp.mpc(1)
        thresh = mp.mpf(10) ** (-digits)
        small_run = 0
        for k in range(100_000):
            term = zpow / mp.gamma(al * k + be)
            partial += term
            if abs(term) < thresh * (abs(partial) + thresh):
                small_run += 1
                if small_run >= 10:
                    break
            else:
                small_run = 0
            zpow *= zz
        else:
            raise ConvergenceError("ml_highprec: series did not settle")
        with mp.workdps(digits):
            return mp.mpc(partial)


def _pole_location(sigma: complex, alpha: float) -> mp.mpc | None:
    """Principal-sheet pole s_2 = sigma**(1/alpha) of s**(alpha-1)/(s**alpha
    - sigma), or None when arg(sigma) falls outside (-alpha*pi, alpha*pi)."""
    arg = math.atan2(sigma.imag, sigma.real)
    if abs(arg) >= alpha * math.pi:
        return None
    return mp.power(mp.mpc(sigma), mp.mpf(1) / alpha)


def bromwich_invert(
    cfg: BromwichConfig, alpha: float, lam: float, t: float
) -> complex:
    """T(t) = E_alpha(lam * i**alpha * t**alpha) by inverting
    s**(alpha-1)/(s**alpha - sigma) on the cotangent contour
    s(theta) = r*theta*(cot(theta) + i), theta in (-pi, pi), r = 2M/(5t),
    with midpoint sampling over the full contour (the transform is not
    conjugate-symmetric, so the usual half-contour fold is unavailable).

    When the pole s_2 lies on or to the right of the contour its residue
    e^{s_2 t}/alpha is added explicitly; a pole too close to the contour
    raises ContourError.
    """
    if cfg.method is not InversionMethod.DEFORMED_CONTOUR:
        raise DomainError(f"unsupported inversion method {cfg.method!r}")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    if not t > 0.0:
        raise DomainError(f"t={t} must be positive")
    growth = abs(lam) ** (1.0 / alpha)
    if cfg.gamma_abscissa is not None and cfg.gamma_abscissa <= growth:
        raise DomainError(
            f"gamma_abscissa={cfg.gamma_abscissa} does not clear the "
            f"transform's rightmost singularity bound {growth:.6g}"
        )
    m_nodes = cfg.nodes
    half = 0.5 * math.pi * alpha
    sigma = lam * complex(math.cos(half), math.sin(half))

    with mp.workdps(35):
        al = mp.mpf(alpha)
        tt = mp.mpf(t)
        sig = mp.mpc(sigma)
        r = mp.mpf(2 * m_nodes) / (5 * tt)

        pole = _pole_location(sigma, alpha)
        add_residue = False
        if pole is not None:
            im2, re2 = mp.im(pole), mp.re(pole)
            if abs(im2) >= mp.pi * r:
                add_residue = True
            else:
                theta_y = im2 / r
                contour_re = r if theta_y == 0 else r * theta_y / mp.tan(theta_y)
                add_residue = re2 >= contour_re
            # reject poles hugging the contour curve itself
            scale = max(mp.mpf(1), abs(pole))
            for j in range(8 * m_nodes):
                th = -mp.pi + (j + mp.mpf(1) / 2) * 2 * mp.pi / (8 * m_nodes)
                s = r * th * (mp.cot(th) + mp.mpc(0, 1))
                if abs(s - pole) < mp.mpf("1e-3") * scale:
                    raise ContourError(
                        f"pole s2={complex(pole)} within 1e-3 of the contour; "
                        f"adjust nodes or t"
                    )

        total = mp.mpc(0)
        dtheta = 2 * mp.pi / m_nodes
        for j in range(m_nodes):
            th = -mp.pi + (j + mp.mpf(1) / 2) * dtheta
            cot = mp.cot(th)
            s = r * th * (cot + mp.mpc(0, 1))
            ds = r * (cot - th / mp.sin(th) ** 2 + mp.mpc(0, 1))
            fhat = mp.power(s, al - 1) / (mp.power(s, al) - sig)
            total += mp.e ** (s * tt) * fhat * ds
        value = total * dtheta / (2 * mp.pi * mp.mpc(0, 1))
        if add_residue:
            value += mp.e ** (pole * tt) / al
        return complex(value)


def _denominator_min_on_path(sigma: complex, alpha: float, u_max: float) -> float:
    """Dense lower estimate of min |u^2 - 2 sigma cos(alpha pi) u + sigma^2|
    over u in [0, u_max]."""
    asig = abs(sigma)
    grid = [np.linspace(0.0, min(u_max, 4.0 * asig + 1.0), 4001)]
    if u_max > 4.0 * asig + 1.0:
        grid.append(np.geomspace(4.0 * asig + 1.0, u_max, 512))
    u = np.concatenate(grid)
    d = u * u - 2.0 * sigma * math.cos(alpha * math.pi) * u + sigma * sigma
    return float(np.min(np.abs(d)))


def f_alpha_quadrature(q: FAlphaQuery) -> complex:
    """F_alpha(sigma; t) by adaptive quadrature of the cut integral,
    integrated to the point where the exponential has decayed to e^-40.
    Warns when alpha sits on the excluded family 2/(5+4k), where the
    real-root branch convention elsewhere in the literature degenerates."""
    _warn_excluded_alpha(q.alpha)
    sigma = q.sigma
    u_cap = (40.0 / q.t) ** q.alpha
    u_max = max(u_cap, 4.0 * abs(sigma))
    if _denominator_min_on_path(sigma, q.alpha, u_max) < 1e-12:
        raise PoleOnPathError(
            f"cut-integral denominator vanishes on the path at alpha={q.alpha} "
            f"(arg sigma = alpha*pi/2 - pi hits -alpha*pi at alpha = 2/3)"
        )
    with mp.workdps(35):
        al = mp.mpf(q.alpha)
        tt = mp.mpf(q.t)
        sig = mp.mpc(sigma)
        two_cos = 2 * mp.cos(al * mp.pi)

        def integrand(u: mp.mpf) -> mp.mpc:
            return mp.e ** (-(u ** (1 / al)) * tt) / (
                u * u - sig * two_cos * u + sig * sig
            )

        asig = abs(sigma)
        points = [mp.mpf(0)]
        for c in (0.5, 1.0, 2.0):
            v = asig * c
            if 0.0 < v < u_max:
                points.append(mp.mpf(v))
        points.append(mp.mpf(u_max))
        integral, err = mp.quad(integrand, points, error=True)
        pref = sig * mp.sin(al * mp.pi) / (al * mp.pi)
        if err > mp.mpf("1e-9") / max(abs(pref), mp.mpf(1)):
            raise QuadratureError(
                f"cut integral error estimate {float(err):.2e} exceeds the "
                f"1e-9 accuracy target at alpha={q.alpha}, t={q.t}"
            )
        return complex(pref * integral)


def _principal_pole_term(q: FAlphaQuery) -> complex:
    """e^{s_2 t}/alpha with the principal-sheet pole, or 0 when the pole is
    off-sheet (alpha <= 2/3 for lam < 0)."""
    half_arg = q.alpha * math.pi / 2.0 - math.pi
    if abs(half_arg) >= q.alpha * math.pi:
        return 0.0 + 0.0j
    s2 = complex(q.sigma) ** (1.0 / q.alpha)
    with mp.workdps(35):
        return complex(mp.e ** (mp.mpc(s2) * q.t)) / q.alpha


def f_alpha_series(
    q: FAlphaQuery, tol: float = 1e-12, use_plus_branch: bool = False
) -> complex:
    """F_alpha(sigma; t) from the series route via the decomposition
    F = (pole term) - E_alpha(sigma * t**alpha).

    The pole term follows the principal-sheet rule (module docstring): for
    alpha > 2/3 it is e^{i lam**(1/alpha) t}/alpha with the minus-branch
    root, for alpha <= 2/3 it is absent. ``use_plus_branch=True`` is a
    diagnostic that forces the pole term to be present with the plus-branch
    root e^{i |lam|^{1/alpha} e^{+i pi/alpha} t}/alpha regardless of alpha;
    useful only for demonstrating how far that convention drifts from
    f_alpha_quadrature.
    """
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tol={tol} outside (0, 1e-6]")
    z = q.sigma * q.t**q.alpha
    digits = min(max(50, int(-math.log10(tol)) + 20), 500)
    e_val = complex(ml_highprec(q.alpha, 1.0, z, digits=digits))
    if use_plus_branch:
        root = neg_lambda_root(q.lam, q.alpha, rule="upper")
        with mp.workdps(35):
            pole = complex(mp.e ** (mp.mpc(0, 1) * mp.mpc(root) * q.t)) / q.alpha
    else:
        pole = _principal_pole_term(q)
    return pole - e_val


def t_via_pole_plus_integral(alpha: float, lam: float, t: float) -> complex:
    """T(t) assembled as (pole term) - F_alpha(sigma; t) with F from the
    quadrature route; the independent cross-check for the series evaluator.
    alpha = 1 short-circuits to exp(i*lam*t)."""
    if alpha == 1.0:
        return complex(mp.e ** (mp.mpc(0, lam * t)))
    q = FAlphaQuery(alpha, lam, t)
    return _principal_pole_term(q) - f_alpha_quadrature(q)
