r"""Mittag-Leffler functions :math:`E_\alpha(z)` and :math:`E_{\alpha,\beta}(z)`
for complex arguments across all magnitude regimes.

Evaluation strategy (``ml_eval``):

* ``alpha == 1`` with ``beta == 1``: the exponential, exactly.
* while the cancellation estimate ``|z|**(1/alpha) <= 11.5`` allows it: the
  Taylor series :math:`\sum_k z^k/\Gamma(\alpha k+\beta)` in doubles.
* otherwise, up to ``|z| < 15``: the pole-plus-cut decomposition of the
  inverse Laplace transform of :math:`s^{\alpha-\beta}/(s^\alpha-z)`,

  .. math::

     E_{\alpha,\beta}(z) = [\,|\arg z| < \alpha\pi\,]\,
         \frac{z^{(1-\beta)/\alpha}}{\alpha} e^{z^{1/\alpha}}
       + \frac{1}{\alpha\pi}\int_0^\infty
         \frac{e^{-u^{1/\alpha}}\,u^{(1-\beta)/\alpha}
               \left(u\sin\pi\beta + z\sin\pi(\alpha-\beta)\right)}
              {u^2 - 2 z u\cos\alpha\pi + z^2}\,du,

  computed with graded Gauss-Legendre panels. The substitution
  ``u = x**alpha`` has already been applied, which removes the endpoint
  singularity of the raw cut integrand.
* ``|z| >= 15``: an algebraic tail plus the exponential term when
  ``|arg z| < alpha*pi``. For ``beta == 1`` the tail is the same series that
  ``ml_asymptotic`` exposes (see its docstring for the exact convention);
  for ``beta != 1`` the standard series
  :math:`-\sum_{k\ge1} z^{-k}/\Gamma(\beta-\alpha k)` is used.

The one-parameter function is ``beta == 1``; there is no separate code path.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple, Sequence

import mpmath as mp
import numpy as np

from .errors import ConvergenceError, DomainError, PoleOnPathError
from .special import gamma_array, recip_gamma

__all__ = [
    "MLDecomposition",
    "SeriesResult",
    "ml_asymptotic",
    "ml_eval",
    "ml_eval_ray",
    "ml_real_imag",
    "ml_series",
]

# double-precision Taylor is allowed while |z|**(1/alpha) stays below this;
# the absolute error is then ~ 1e-16 * exp(11.5) ~ 1e-11
_DOUBLE_SAFE_EXPONENT = 11.5

# beyond this radius the algebraic tail takes over
_TAIL_RADIUS = 15.0

_MAX_TERMS = 10_000


class SeriesResult(NamedTuple):
    value: complex
    terms: int


class MLDecomposition(NamedTuple):
    e_r: float
    e_i: float


def _check_orders(alpha: float, beta: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    if not beta > 0.0:
        raise DomainError(f"beta={beta} must be positive")


# {{{ Taylor series

def ml_series(alpha: float, beta: float, z: complex, tol: float = 1e-15) -> SeriesResult:
    """Plain double-precision Taylor sum of E_{alpha,beta}(z).

    Valid for |z| <= 10. Truncates when the last 3 consecutive terms are each
    below tol * |partial sum|. This is the transparent "series regime"
    evaluator; it does not guard against cancellation (ml_eval does).
    """
    _check_orders(alpha, beta)
    z = complex(z)
    if abs(z) > 10.0:
        raise DomainError(f"ml_series: |z|={abs(z):.3g} outside the series regime (|z| <= 10)")
    if tol < 1e-15:
        raise DomainError(f"ml_series: tol={tol} below 1e-15")

    partial = 0.0 + 0.0j
    zpow = 1.0 + 0.0j
    small_run = 0
    for k in range(_MAX_TERMS):
        term = zpow * recip_gamma(alpha * k + beta)
        partial += term
        if not (math.isfinite(partial.real) and math.isfinite(partial.imag)):
            raise ConvergenceError("ml_series: partial sum left the double range")
        if abs(term) < tol * abs(partial):
            small_run += 1
            if small_run >= 3:
                return SeriesResult(partial, k + 1)
        else:
            small_run = 0
        zpow *= z
    raise ConvergenceError(f"ml_series: no convergence after {_MAX_TERMS} terms")


def _taylor_mp(alpha: float, beta: float, z: complex) -> complex:
    """Taylor sum in extended precision; used when doubles would cancel."""
    s_exp = abs(z) ** (1.0 / alpha)
    guard = int(0.4343 * s_exp) + 10
    if guard > 300:
        raise ConvergenceError(
            f"ml evaluation needs ~{guard} guard digits at |z|={abs(z):.3g}, "
            f"alpha={alpha}; argument too close to the Stokes ray"
        )
    with mp.workdps(17 + guard):
        # alpha and beta must be promoted before the k multiplication: a
        # double-precision alpha*k carries an O(k*eps) argument error into
        # gamma, and the cancellation in this regime amplifies that into
        # garbage that is identical at every working precision
        al = mp.mpf(alpha)
        be = mp.mpf(beta)
        zz = mp.mpc(z)
        partial = mp.mpc(0)
        zpow = mp.mpc(1)
        small_run = 0
        for k in range(_MAX_TERMS):
            term = zpow / mp.gamma(al * k + be)
            partial += term
            if abs(term) < mp.mpf(10) ** (-18) * abs(partial):
                small_run += 1
                if small_run >= 3:
                    break
            else:
                small_run = 0
            zpow *= zz
        else:
            raise ConvergenceError("extended-precision series did not converge")
        return complex(partial)

# }}}


# {{{ algebraic tail

def _tail_terms(alpha: float, z: complex, n_terms: int) -> list[complex]:
    # -z^{-(1+nu)} / Gamma(1 - nu*alpha), nu = 0 .. n_terms-1
    zinv = 1.0 / z
    out = []
    zp = zinv
    for nu in range(n_terms):
        out.append(-zp * recip_gamma(1.0 - nu * alpha))
        zp *= zinv
    return out


def ml_asymptotic(alpha: float, z: complex, n_terms: int) -> complex:
    """Algebraic large-|z| series in the convention used throughout this
    package: -sum_{nu=0}^{n_terms-1} z^{-(1+nu)} / Gamma(1 - nu*alpha).

    Note the coefficient indexing: the leading term is -1/z (not
    -1/(z*Gamma(1-alpha))). The large-time acceptance checks and the
    ``prob_large_t`` column are defined against exactly this convention; see
    the README numerical notes for how it differs from the classical
    expansion and what that implies at the |z| = 15 seam.

    Terms whose reciprocal gamma vanishes (1 - nu*alpha at a non-positive
    integer) contribute zero. Requires |z| >= 10 and
    1 <= n_terms <= floor(1/alpha) + 5.
    """
    _check_orders(alpha, 1.0)
    z = complex(z)
    if abs(z) < 10.0:
        raise DomainError(f"ml_asymptotic: |z|={abs(z):.3g} below the asymptotic regime (|z| >= 10)")
    cap = math.floor(1.0 / alpha) + 5
    if not 1 <= n_terms <= cap:
        raise DomainError(f"ml_asymptotic: n_terms={n_terms} outside [1, {cap}]")
    return sum(_tail_terms(alpha, z, n_terms))


def _tail_eval(alpha: float, beta: float, z: complex) -> complex:
    """|z| >= 15 evaluation: algebraic series at optimal truncation plus the
    exponential term inside the sector |arg z| < alpha*pi."""
    cap = math.floor(1.0 / alpha) + 5
    if beta == 1.0:
        terms = _tail_terms(alpha, z, cap)
    else:
        zinv = 1.0 / z
        terms = []
        zp = zinv
        for k in range(1, cap + 1):
            terms.append(-zp * recip_gamma(beta - alpha * k))
            zp *= zinv
    total = 0.0 + 0.0j
    last = math.inf
    for t in terms:
        mag = abs(t)
        if mag > last and mag != 0.0:
            break
        total += t
        if mag != 0.0:
            last = mag
    if abs(cmath.phase(z)) < alpha * math.pi:
        try:
            root = z ** (1.0 / alpha)
            total += root ** (1.0 - beta) * cmath.exp(root) / alpha
        except OverflowError as exc:
            raise ConvergenceError(
                f"exponential term overflows the double range at z={z}"
            ) from exc
    return total

# }}}


# {{{ pole + cut bridge

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)


def _cut_root_gap(sigma: complex, alpha: float) -> float:
    """Distance from the denominator roots sigma*exp(+-i*alpha*pi) to the
    integration ray [0, inf)."""
    gap = math.inf
    for sgn in (1.0, -1.0):
        r = sigma * cmath.exp(1j * sgn * alpha * math.pi)
        d = abs(r.imag) if r.real > 0.0 else abs(r)
        gap = min(gap, d)
    return gap


def _cut_breakpoints(alpha: float, asig: float, gap: float, u_max: float) -> np.ndarray:
    pts = {0.0, u_max}
    if asig > 0.0:
        for c in (0.25, 0.5, 0.75, 0.9, 1.0, 1.1, 1.3, 1.6, 2.0, 2.5):
            v = asig * c
            if 0.0 < v < u_max:
                pts.add(v)
        w = max(gap, 1e-6 * asig)
        if w < 0.2 * asig:
            for j in (1.0, 2.0, 4.0, 8.0):
                for v in (asig - j * w, asig + j * w):
                    if 0.0 < v < u_max:
                        pts.add(v)
    # geometric ladders: down toward 0 (resolves the large-t decay scales)
    # and up toward u_max
    v = min(asig if asig > 0.0 else u_max, u_max) / 4.0
    while v > u_max * 1e-12:
        pts.add(v)
        v /= 6.0
    v = max(2.5 * asig, u_max / 64.0)
    while v < u_max:
        pts.add(v)
        v *= 2.0
    return np.array(sorted(pts))


def _bridge_values(
    alpha: float, beta: float, sigma: complex, ts: np.ndarray
) -> np.ndarray:
    """E_{alpha,beta}(sigma * t**alpha) for an array of t > 0 via the
    pole-plus-cut representation. sigma may be any nonzero complex number
    whose argument is bounded away from +-alpha*pi."""
    asig = abs(sigma)
    gap = _cut_root_gap(sigma, alpha)
    if gap < 1e-8 * max(1.0, asig):
        raise PoleOnPathError(
            f"denominator root within {gap:.2e} of the integration path "
            f"(arg sigma ~ +-alpha*pi); no cut representation available"
        )
    t_lo = float(np.min(ts))
    u_max = max((40.0 / t_lo) ** alpha, 2.5 * asig)
    bks = _cut_breakpoints(alpha, asig, gap, u_max)

    mid = 0.5 * (bks[1:] + bks[:-1])
    half = 0.5 * (bks[1:] - bks[:-1])
    u = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()

    sin_b = math.sin(math.pi * beta)
    sin_ab = math.sin(math.pi * (alpha - beta))
    denom = u * u - 2.0 * sigma * math.cos(alpha * math.pi) * u + sigma * sigma
    g = (u * sin_b + sigma * sin_ab) / denom
    if beta != 1.0:
        g = g * u ** ((1.0 - beta) / alpha)
    wg = w * g / (alpha * math.pi)

    x = u ** (1.0 / alpha)
    out = np.empty(len(ts), dtype=complex)
    # the exp matrix is (nodes x chunk); chunk to bound memory
    chunk = max(1, int(4e6 // max(len(x), 1)))
    for i in range(0, len(ts), chunk):
        tc = ts[i : i + chunk]
        with np.errstate(over="ignore"):
            m = np.exp(-np.outer(x, tc))
        out[i : i + chunk] = wg @ m

    if abs(cmath.phase(sigma)) < alpha * math.pi:
        root = sigma ** (1.0 / alpha)
        with np.errstate(over="ignore"):
            pole = np.exp(root * ts) / alpha
        if beta != 1.0:
            pole = pole * (root * ts) ** (1.0 - beta)
        out = out + pole
    return out

# }}}


# {{{ global evaluator

def _taylor_double(alpha: float, beta: float, z: complex) -> complex:
    partial = 0.0 + 0.0j
    zpow = 1.0 + 0.0j
    small_run = 0
    for k in range(_MAX_TERMS):
        term = zpow * recip_gamma(alpha * k + beta)
        partial += term
        if abs(term) < 1e-17 * abs(partial):
            small_run += 1
            if small_run >= 3:
                return partial
        else:
            small_run = 0
        zpow *= z
    raise ConvergenceError("Taylor series did not converge")


def ml_eval(alpha: float, beta: float, z: complex) -> complex:
    """Globally dispatched evaluation of E_{alpha,beta}(z); target relative
    accuracy ~1e-10 away from the |z| = 15 seam (see module docstring)."""
    _check_orders(alpha, beta)
    z = complex(z)
    az = abs(z)
    if az == 0.0:
        return complex(recip_gamma(beta))
    if alpha == 1.0 and beta == 1.0:
        return cmath.exp(z)
    if az >= _TAIL_RADIUS:
        return _tail_eval(alpha, beta, z)
    if az ** (1.0 / alpha) <= _DOUBLE_SAFE_EXPONENT:
        return _taylor_double(alpha, beta, z)
    # cancellation territory: cut representation unless the argument is
    # nearly on a Stokes ray, where the integrand peaks too hard; fall back
    # to the extended-precision series there
    if _cut_root_gap(z, alpha) >= 1e-6 * max(1.0, az):
        return complex(_bridge_values(alpha, beta, z, np.array([1.0]))[0])
    return _taylor_mp(alpha, beta, z)


def ml_real_imag(alpha: float, lam: float, t: float) -> MLDecomposition:
    """(Re, Im) of E_alpha(lam * i**alpha * t**alpha)."""
    if t < 0.0:
        raise DomainError(f"ml_real_imag: t={t} must be non-negative")
    _check_orders(alpha, 1.0)
    half = 0.5 * math.pi * alpha
    sigma = lam * complex(math.cos(half), math.sin(half))
    value = ml_eval(alpha, 1.0, sigma * t**alpha)
    return MLDecomposition(value.real, value.imag)

# }}}


# {{{ batch evaluation on the physical ray

def ml_eval_ray(
    alpha: float, lam: float, ts: Sequence[float], beta: float = 1.0
) -> np.ndarray:
    """Vectorized E_{alpha,beta}(lam * i**alpha * t**alpha) over a t >= 0 grid.

    Same mathematics as ml_eval, but the regime decision is made per point
    and the cut integral's nodes are shared across the whole batch, which is
    what makes dense probability scans cheap.
    """
    _check_orders(alpha, beta)
    ts = np.asarray(ts, dtype=float)
    if ts.ndim != 1:
        raise DomainError("ml_eval_ray: ts must be one-dimensional")
    if len(ts) and float(np.min(ts)) < 0.0:
        raise DomainError("ml_eval_ray: negative t in grid")
    if lam == 0.0:
        return np.full(len(ts), complex(recip_gamma(beta)))

    if alpha == 1.0 and beta == 1.0:
        return np.exp(1j * lam * ts)

    half = 0.5 * math.pi * alpha
    sigma = lam * complex(math.cos(half), math.sin(half))
    zs = sigma * ts**alpha
    az = np.abs(zs)
    s_exp = abs(lam) ** (1.0 / alpha) * ts

    out = np.empty(len(ts), dtype=complex)
    m_taylor = s_exp <= _DOUBLE_SAFE_EXPONENT
    m_tail = (~m_taylor) & (az >= _TAIL_RADIUS)
    m_bridge = ~(m_taylor | m_tail)

    if m_taylor.any():
        out[m_taylor] = _taylor_batch(alpha, beta, zs[m_taylor])
    if m_tail.any():
        out[m_tail] = _tail_batch(alpha, beta, zs[m_tail])
    if m_bridge.any():
        try:
            out[m_bridge] = _bridge_values(alpha, beta, sigma, ts[m_bridge])
        except PoleOnPathError:
            # alpha ~ 2/3 with lambda < 0: pole on the cut; the series still
            # converges, just needs guard digits
            out[m_bridge] = [
                _taylor_mp(alpha, beta, z) for z in zs[m_bridge]
            ]
    return out


def _taylor_batch(alpha: float, beta: float, zs: np.ndarray) -> np.ndarray:
    partial = np.zeros(len(zs), dtype=complex)
    zpow = np.ones(len(zs), dtype=complex)
    small_run = np.zeros(len(zs), dtype=int)
    block = 64
    k = 0
    while k < 4096:
        ks = np.arange(k, k + block, dtype=float)
        rg = 1.0 / gamma_array(alpha * ks + beta).real
        for j in range(block):
            term = zpow * rg[j]
            partial += term
            small = np.abs(term) < 1e-17 * np.abs(partial)
            small_run = np.where(small, small_run + 1, 0)
            zpow *= zs
        if (small_run >= 3).all():
            return partial
        k += block
    raise ConvergenceError("batch Taylor series did not converge")


def _tail_batch(alpha: float, beta: float, zs: np.ndarray) -> np.ndarray:
    cap = math.floor(1.0 / alpha) + 5
    zinv = 1.0 / zs
    total = np.zeros(len(zs), dtype=complex)
    last = np.full(len(zs), np.inf)
    active = np.ones(len(zs), dtype=bool)
    zp = zinv.copy()
    for j in range(cap):
        if beta == 1.0:
            coeff = complex(recip_gamma(1.0 - j * alpha))
        else:
            coeff = complex(recip_gamma(beta - alpha * (j + 1)))
        term = -zp * coeff
        mag = np.abs(term)
        grew = (mag > last) & (mag != 0.0)
        active &= ~grew
        total += np.where(active, term, 0.0)
        last = np.where((mag != 0.0) & active, mag, last)
        zp *= zinv
    ph = np.angle(zs)
    in_sector = np.abs(ph) < alpha * math.pi
    if in_sector.any():
        root = zs[in_sector] ** (1.0 / alpha)
        with np.errstate(over="ignore"):
            pole = np.exp(root) / alpha
        if beta != 1.0:
            pole = pole * root ** (1.0 - beta)
        total[in_sector] += pole
    return total

# }}}
