r"""Fox H-functions by their Mellin-Barnes parameters.

An H-function is fixed by orders :math:`(m, n, p, q)` and two lists of
(shift, slope) pairs, upper :math:`(a_j, A_j)_{j=1..p}` and lower
:math:`(b_j, B_j)_{j=1..q}`, through

.. math::

   H^{m,n}_{p,q}(z) = \frac{1}{2\pi i} \int_C
      \frac{\prod_{j=1}^m \Gamma(b_j + B_j s) \prod_{j=1}^n \Gamma(1 - a_j - A_j s)}
           {\prod_{j=m+1}^q \Gamma(1 - b_j - B_j s) \prod_{j=n+1}^p \Gamma(a_j + A_j s)}
      \, z^{-s} \, ds.

This module never integrates that contour directly.  It classifies
convergence from :math:`\mu = \sum B_j - \sum A_j` and
:math:`\beta^* = \prod A_j^{A_j} \prod B_j^{-B_j}`, and evaluates through
the two residue expansions:

* series I (ascending powers of z, residues over the lower-side pole
  lattices), valid for all z when :math:`\mu > 0` and inside
  :math:`|z| < 1/\beta^*` when :math:`\mu = 0`;
* series II (descending powers of z, residues over the upper-side
  lattices), valid for all z when :math:`\mu < 0` and outside the disk when
  :math:`\mu = 0`.

Both expansions require the relevant pole lattices to be simple; the pair
of ``h_check_simple_poles`` scans decides that.  Series terms are assembled
in log space (sums of ``scipy.special.loggamma``) so that balanced
numerator/denominator growth never overflows an intermediate, with
``recip_gamma`` supplying the pole semantics: a denominator gamma sitting
on a pole annihilates the term rather than faulting.

The parameter-algebra transforms (argument inversion, Laplace image,
Riemann-Liouville derivative image) are pure functions on the parameter
lists and perform no evaluation, so they tolerate parameter sets the
evaluator refuses.  The private ``_invert_raw``/``_laplace_raw``/``_rl_raw``
helpers run the same algebra on bare tuples without any validation, for
working with formal parameter sets that carry negative slopes.

A note on the order constraint: the Mellin-Barnes definition needs
:math:`m \ge 1`, but ``h_invert_argument`` of a valid parameter set with
:math:`n = 0` lands on :math:`m = 0`, and such sets are still evaluable
through series II (e.g. the image of :math:`e^{-z}` is
:math:`H^{0,1}_{1,0}(z) = e^{-1/z}`).  The constructor therefore accepts
:math:`m = 0`; series I refuses it.
"""

from __future__ import annotations

import cmath
import enum
import math
import re
from dataclasses import dataclass, field

import numpy as np
import scipy.special as _sps

from .errors import (
    ConvergenceError,
    DomainError,
    ParamError,
    RegionError,
    UnsupportedError,
)
from .special import recip_gamma

__all__ = [
    "HConvergenceClass",
    "HFunctionParams",
    "HVerdict",
    "PoleSide",
    "h_check_simple_poles",
    "h_classify",
    "h_eval",
    "h_invert_argument",
    "h_laplace_params",
    "h_parse",
    "h_rl_derivative_params",
    "h_serialize",
    "h_series_expansion_I",
    "h_series_expansion_II",
    "ml_h_params",
]

_SCAN_DEPTH = 50
_COINCIDENCE_TOL = 1e-10
_RING_TOL = 1e-6
_MAX_TERMS = 10_000

_Pair = tuple[complex, float]


def _as_pairs(pairs, what: str) -> tuple[_Pair, ...]:
    out = []
    for k, item in enumerate(pairs):
        try:
            shift, slope = item
        except (TypeError, ValueError):
            raise ParamError(f"{what}[{k}] is not a (shift, slope) pair: {item!r}")
        out.append((complex(shift), float(slope)))
    return tuple(out)


@dataclass(frozen=True)
class HFunctionParams:
    """Orders and parameter pairs of H^{m,n}_{p,q}.

    upper holds the (a_j, A_j) pairs (length p), lower the (b_j, B_j)
    pairs (length q). All slopes must be positive; the separation
    condition between the first n upper lattices and the first m lower
    lattices is scanned to depth 50 at construction.
    """

    m: int
    n: int
    p: int
    q: int
    upper: tuple[_Pair, ...] = field(default=())
    lower: tuple[_Pair, ...] = field(default=())

    def __post_init__(self) -> None:
        for name in ("m", "n", "p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ParamError(f"{name}={v!r} must be a non-negative integer")
        object.__setattr__(self, "upper", _as_pairs(self.upper, "upper"))
        object.__setattr__(self, "lower", _as_pairs(self.lower, "lower"))
        if len(self.upper) != self.p:
            raise ParamError(f"upper has {len(self.upper)} pairs, expected p={self.p}")
        if len(self.lower) != self.q:
            raise ParamError(f"lower has {len(self.lower)} pairs, expected q={self.q}")
        if not 0 <= self.n <= self.p:
            raise ParamError(f"need 0 <= n <= p, got n={self.n}, p={self.p}")
        if not self.m <= self.q:
            raise ParamError(f"need m <= q, got m={self.m}, q={self.q}")
        for k, (_, slope) in enumerate(self.upper):
            if not slope > 0.0:
                raise ParamError(f"upper slope A_{k + 1}={slope} must be positive")
        for k, (_, slope) in enumerate(self.lower):
            if not slope > 0.0:
                raise ParamError(f"lower slope B_{k + 1}={slope} must be positive")
        self._check_separation()

    def _check_separation(self) -> None:
        # upper lattice j may not intersect lower lattice h:
        # A_j (b_h + nu) != B_h (a_j - lam - 1) for nu, lam in 0..50
        ks = np.arange(_SCAN_DEPTH + 1)
        for j in range(self.n):
            a, slope_a = self.upper[j]
            for h in range(self.m):
                b, slope_b = self.lower[h]
                left = slope_a * (b + ks)
                right = slope_b * (a - ks - 1.0)
                gap = np.abs(left[:, None] - right[None, :])
                if gap.min() < _COINCIDENCE_TOL:
                    nu, lam = np.unravel_index(int(gap.argmin()), gap.shape)
                    raise ParamError(
                        f"upper lattice {j + 1} meets lower lattice {h + 1} "
                        f"(nu={nu}, lam={lam}): the defining contour cannot "
                        f"separate the gamma pole families"
                    )


class PoleSide(enum.Enum):
    LOWER = "Lower"
    UPPER = "Upper"


class HVerdict(enum.Enum):
    ALL_Z = "AllZ"
    DISK_ONLY = "DiskOnly"
    EXTERIOR_ONLY = "ExteriorOnly"
    # reserved: the mu-sign trichotomy below is total, so this never comes
    # out of h_classify; kept so downstream switches stay exhaustive
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class HConvergenceClass:
    mu: float
    beta_star: float
    verdict: HVerdict


def h_classify(params: HFunctionParams) -> HConvergenceClass:
    r"""Convergence class from :math:`\mu = \sum B_j - \sum A_j` and
    :math:`\beta^* = \prod A_j^{A_j} \prod B_j^{-B_j}`.

    mu > 0 means series I converges for every z != 0 (AllZ); mu = 0 means
    it converges only on |z| < 1/beta*, with series II taking over outside
    (DiskOnly); mu < 0 means only the descending series II converges
    (ExteriorOnly). Exact zero is decided with a relative 1e-12 cushion
    since mu is an accumulated float sum.
    """
    sum_a = sum(slope for _, slope in params.upper)
    sum_b = sum(slope for _, slope in params.lower)
    mu = sum_b - sum_a
    beta_star = 1.0
    for _, slope in params.upper:
        beta_star *= slope**slope
    for _, slope in params.lower:
        beta_star *= slope ** (-slope)
    if abs(mu) <= 1e-12 * (sum_a + sum_b + 1.0):
        verdict = HVerdict.DISK_ONLY
        mu = 0.0
    elif mu > 0.0:
        verdict = HVerdict.ALL_Z
    else:
        verdict = HVerdict.EXTERIOR_ONLY
    return HConvergenceClass(mu=mu, beta_star=beta_star, verdict=verdict)


def _lattices_coincide(x: complex, sx: float, y: complex, sy: float) -> bool:
    """True when sy*(x+lam) == sx*(y+nu) for some lam, nu in the scan range."""
    ks = np.arange(_SCAN_DEPTH + 1)
    left = sy * (x + ks)
    right = sx * (y + ks)
    gap = np.abs(left[:, None] - right[None, :])
    return bool(gap.min() < _COINCIDENCE_TOL)


def h_check_simple_poles(params: HFunctionParams, side: PoleSide) -> bool:
    """True iff the pole lattices of the given gamma group are pairwise
    disjoint to depth 50 and tolerance 1e-10, so every pole is simple.

    Lower scans the first m lower pairs (lattices s = -(b_j + k)/B_j),
    Upper the first n upper pairs (lattices s = (1 - a_j + k)/A_j).
    Groups of size 0 or 1 are vacuously simple.
    """
    if side is PoleSide.LOWER:
        fams = [(b, slope) for b, slope in params.lower[: params.m]]
    elif side is PoleSide.UPPER:
        fams = [(1.0 - a, slope) for a, slope in params.upper[: params.n]]
    else:
        raise DomainError(f"unknown pole side {side!r}")
    for j in range(len(fams)):
        for h in range(j + 1, len(fams)):
            if _lattices_coincide(fams[j][0], fams[j][1], fams[h][0], fams[h][1]):
                return False
    return True


def _loggamma(z: complex) -> complex:
    return complex(_sps.loggamma(complex(z)))


def _sum_series(
    term_at, n_fams: int, tol: float, label: str
) -> complex:
    """Shared truncation rule: per family, stop after 3 consecutive terms
    below tol relative to the running total; hard cap then ConvergenceError."""
    total = 0.0 + 0.0j
    for h in range(n_fams):
        small_run = 0
        for nu in range(_MAX_TERMS):
            term = term_at(h, nu)
            if not (math.isfinite(term.real) and math.isfinite(term.imag)):
                raise ConvergenceError(f"{label}: non-finite term at h={h + 1}, nu={nu}")
            total += term
            if abs(term) < tol * (abs(total) + 1e-300):
                small_run += 1
                if small_run >= 3:
                    break
            else:
                small_run = 0
        else:
            raise ConvergenceError(
                f"{label}: family {h + 1} did not converge in {_MAX_TERMS} terms"
            )
    return total


def _check_tol(tol: float) -> None:
    if tol < 1e-15:
        raise DomainError(f"tol={tol} below 1e-15")


def h_series_expansion_I(
    params: HFunctionParams, z: complex, tol: float = 1e-12
) -> complex:
    r"""Ascending expansion: residues over the lower-side poles
    :math:`s_{h\nu} = (b_h + \nu)/B_h`,

    .. math::

       H(z) = \sum_{h=1}^{m} \sum_{\nu=0}^{\infty}
         \frac{\prod_{j \ne h}^{m} \Gamma(b_j - B_j s)
               \prod_{j=1}^{n} \Gamma(1 - a_j + A_j s)}
              {\prod_{j=m+1}^{q} \Gamma(1 - b_j + B_j s)
               \prod_{j=n+1}^{p} \Gamma(a_j - A_j s)}
         \frac{(-1)^\nu \, z^{s}}{\nu! \, B_h}.

    Requires the lower pole lattices simple and the point inside the
    region of convergence (everywhere for mu > 0, |z| < 1/beta* for
    mu = 0); RegionError otherwise. Denominator gammas on poles kill
    their term via recip_gamma.
    """
    _check_tol(tol)
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    if params.m == 0:
        raise RegionError("no lower-side pole families to expand over (m=0)")
    if not h_check_simple_poles(params, PoleSide.LOWER):
        raise RegionError(
            "lower-side poles are not simple; the residue expansion does not apply"
        )
    cls = h_classify(params)
    if cls.verdict is HVerdict.EXTERIOR_ONLY:
        raise RegionError("mu < 0: the ascending series diverges for every z")
    if cls.verdict is HVerdict.DISK_ONLY and abs(z) * cls.beta_star >= 1.0:
        raise RegionError(
            f"|z|={abs(z):.6g} outside the convergence disk of radius "
            f"{1.0 / cls.beta_star:.6g}"
        )
    log_z = cmath.log(z)
    m, n, p, q = params.m, params.n, params.p, params.q
    upper, lower = params.upper, params.lower

    def term_at(h: int, nu: int) -> complex:
        b_h, slope_h = lower[h]
        s = (b_h + nu) / slope_h
        log_term = s * log_z - _loggamma(nu + 1) - math.log(slope_h)
        for j in range(m):
            if j != h:
                log_term += _loggamma(lower[j][0] - lower[j][1] * s)
        for j in range(n):
            log_term += _loggamma(1.0 - upper[j][0] + upper[j][1] * s)
        for j in range(m, q):
            arg = 1.0 - lower[j][0] + lower[j][1] * s
            if recip_gamma(arg) == 0:
                return 0.0 + 0.0j
            log_term -= _loggamma(arg)
        for j in range(n, p):
            arg = upper[j][0] - upper[j][1] * s
            if recip_gamma(arg) == 0:
                return 0.0 + 0.0j
            log_term -= _loggamma(arg)
        value = cmath.exp(log_term)
        return -value if nu % 2 else value

    return _sum_series(term_at, m, tol, "h_series_expansion_I")


def h_series_expansion_II(
    params: HFunctionParams, z: complex, tol: float = 1e-12
) -> complex:
    r"""Descending expansion: residues over the upper-side poles
    :math:`s_{h\nu} = (1 - a_h + \nu)/A_h`, giving powers :math:`z^{-s}`,

    .. math::

       H(z) = \sum_{h=1}^{n} \sum_{\nu=0}^{\infty}
         \frac{\prod_{j \ne h}^{n} \Gamma(1 - a_j - A_j s)
               \prod_{j=1}^{m} \Gamma(b_j + B_j s)}
              {\prod_{j=n+1}^{p} \Gamma(a_j + A_j s)
               \prod_{j=m+1}^{q} \Gamma(1 - b_j - B_j s)}
         \frac{(-1)^\nu \, z^{-s}}{\nu! \, A_h}.

    Requires the upper pole lattices simple and mu < 0, or mu = 0 with
    |z| > 1/beta*; RegionError otherwise (in particular for mu > 0).
    """
    _check_tol(tol)
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    if params.n == 0:
        raise RegionError("no upper-side pole families to expand over (n=0)")
    if not h_check_simple_poles(params, PoleSide.UPPER):
        raise RegionError(
            "upper-side poles are not simple; the residue expansion does not apply"
        )
    cls = h_classify(params)
    if cls.verdict is HVerdict.ALL_Z:
        raise RegionError("mu > 0: the descending series diverges for every z")
    if cls.verdict is HVerdict.DISK_ONLY and abs(z) * cls.beta_star <= 1.0:
        raise RegionError(
            f"|z|={abs(z):.6g} inside the disk where only the ascending "
            f"series converges"
        )
    log_z = cmath.log(z)
    m, n, p, q = params.m, params.n, params.p, params.q
    upper, lower = params.upper, params.lower

    def term_at(h: int, nu: int) -> complex:
        a_h, slope_h = upper[h]
        s = (1.0 - a_h + nu) / slope_h
        log_term = -s * log_z - _loggamma(nu + 1) - math.log(slope_h)
        for j in range(n):
            if j != h:
                log_term += _loggamma(1.0 - upper[j][0] - upper[j][1] * s)
        for j in range(m):
            log_term += _loggamma(lower[j][0] + lower[j][1] * s)
        for j in range(n, p):
            arg = upper[j][0] + upper[j][1] * s
            if recip_gamma(arg) == 0:
                return 0.0 + 0.0j
            log_term -= _loggamma(arg)
        for j in range(m, q):
            arg = 1.0 - lower[j][0] - lower[j][1] * s
            if recip_gamma(arg) == 0:
                return 0.0 + 0.0j
            log_term -= _loggamma(arg)
        value = cmath.exp(log_term)
        return -value if nu % 2 else value

    return _sum_series(term_at, n, tol, "h_series_expansion_II")


def h_eval(params: HFunctionParams, z: complex) -> complex:
    """Evaluate H(z) through whichever residue expansion converges at z.

    mu > 0 uses the ascending series, mu < 0 the descending one, mu = 0
    picks by |z| against the disk radius 1/beta* and refuses the ring
    where |z|*beta* is within 1e-6 of 1 (no convergent representation
    there). UnsupportedError when the applicable expansion has no pole
    families or non-simple poles.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    cls = h_classify(params)
    if cls.verdict is HVerdict.DISK_ONLY:
        ring = abs(z) * cls.beta_star
        if abs(ring - 1.0) < _RING_TOL:
            raise UnsupportedError(
                f"|z|*beta* = {ring:.8f} sits on the convergence boundary; "
                f"neither expansion applies"
            )
        ascending = ring < 1.0
    else:
        ascending = cls.verdict is HVerdict.ALL_Z
    if ascending:
        if params.m == 0 or not h_check_simple_poles(params, PoleSide.LOWER):
            raise UnsupportedError(
                "ascending expansion unavailable (m=0 or non-simple lower poles)"
            )
        return h_series_expansion_I(params, z, tol=1e-14)
    if params.n == 0 or not h_check_simple_poles(params, PoleSide.UPPER):
        raise UnsupportedError(
            "descending expansion unavailable (n=0 or non-simple upper poles)"
        )
    return h_series_expansion_II(params, z, tol=1e-14)


# -- parameter algebra -------------------------------------------------------
#
# The raw helpers work on bare (m, n, p, q, upper, lower) tuples with no
# validation, so formal parameter sets with negative slopes can be pushed
# through the same bookkeeping. The public wrappers validate by
# constructing HFunctionParams.

_RawParams = tuple[int, int, int, int, tuple[_Pair, ...], tuple[_Pair, ...]]


def _invert_raw(raw: _RawParams) -> _RawParams:
    m, n, p, q, upper, lower = raw
    new_upper = tuple((1.0 - b, slope) for b, slope in lower)
    new_lower = tuple((1.0 - a, slope) for a, slope in upper)
    return (n, m, q, p, new_upper, new_lower)


def _laplace_raw(raw: _RawParams, rho: float, sigma: float) -> _RawParams:
    m, n, p, q, upper, lower = raw
    return (m, n + 1, p + 1, q, ((1.0 - rho, sigma),) + tuple(upper), tuple(lower))


def _rl_raw(raw: _RawParams, a_exp: float, b_exp: float, beta_ord: float) -> _RawParams:
    m, n, p, q, upper, lower = raw
    new_upper = ((-a_exp, b_exp),) + tuple(upper)
    new_lower = tuple(lower) + ((beta_ord - a_exp, b_exp),)
    return (m, n + 1, p + 1, q + 1, new_upper, new_lower)


def _raw(params: HFunctionParams) -> _RawParams:
    return (params.m, params.n, params.p, params.q, params.upper, params.lower)


def h_invert_argument(params: HFunctionParams) -> HFunctionParams:
    """Parameters of the mirrored function: H^{m,n}_{p,q}(z) =
    H^{n,m}_{q,p}(1/z) with upper (a,A) -> lower (1-a,A) and lower
    (b,B) -> upper (1-b,B). An involution."""
    m, n, p, q, upper, lower = _invert_raw(_raw(params))
    return HFunctionParams(m=m, n=n, p=p, q=q, upper=upper, lower=lower)


def h_rl_derivative_params(
    params: HFunctionParams,
    a_exp: float,
    b_exp: float,
    beta_ord: float,
    c: float,
) -> tuple[HFunctionParams, float]:
    """Parameter image of the Riemann-Liouville derivative of order
    beta_ord applied to t**a_exp * H(c * t**b_exp): the result is
    t**(a_exp - beta_ord) * H'(c * t**b_exp) where H' gains a prepended
    upper pair (-a_exp, b_exp) and an appended lower pair
    (beta_ord - a_exp, b_exp).

    Returns (new params, new prefactor exponent a_exp - beta_ord). The
    argument coefficient c rides through unchanged; it is accepted so call
    sites document the full object being differentiated.

    Preconditions: b_exp > 0, and a_exp + b_exp * min(Re b_j / B_j) > -1
    over the first m lower pairs (integrability of the t-power at 0).
    """
    if not b_exp > 0.0:
        raise ParamError(f"b_exp={b_exp} must be positive")
    if params.m > 0:
        low = min(b.real / slope for b, slope in params.lower[: params.m])
        if not a_exp + b_exp * low > -1.0:
            raise ParamError(
                f"a_exp + b_exp*min(b_j/B_j) = {a_exp + b_exp * low:.6g} "
                f"violates the > -1 integrability requirement"
            )
    m, n, p, q, upper, lower = _rl_raw(_raw(params), a_exp, b_exp, beta_ord)
    out = HFunctionParams(m=m, n=n, p=p, q=q, upper=upper, lower=lower)
    return out, a_exp - beta_ord


def h_laplace_params(
    params: HFunctionParams, rho: float, sigma: float
) -> HFunctionParams:
    """Parameter image of the Laplace transform of
    x**(rho-1) * H(a * x**sigma): the transform is
    s**(-rho) * H'(a * s**(-sigma)) where H' gains a prepended upper pair
    (1-rho, sigma). The caller tracks the s**(-rho) prefactor and the
    argument map; only the parameter bookkeeping happens here."""
    if not sigma > 0.0:
        raise ParamError(f"sigma={sigma} must be positive")
    m, n, p, q, upper, lower = _laplace_raw(_raw(params), rho, sigma)
    return HFunctionParams(m=m, n=n, p=p, q=q, upper=upper, lower=lower)


def ml_h_params(alpha: float) -> HFunctionParams:
    """The H^{1,1}_{1,2} parameter set whose ascending expansion reproduces
    the one-parameter Mittag-Leffler function: H(z) = E_alpha(-z)."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    return HFunctionParams(
        m=1,
        n=1,
        p=1,
        q=2,
        upper=((0.0, 1.0),),
        lower=((0.0, 1.0), (0.0, alpha)),
    )


# -- text form ---------------------------------------------------------------

_H_RE = re.compile(
    r"^H\[(\d+),(\d+),(\d+),(\d+)\]\s+upper=(\S+)\s+lower=(\S+)$"
)


def _fmt_shift(a: complex) -> str:
    if a.imag == 0.0:
        return repr(a.real)
    return repr(complex(a)).strip("()")


def _fmt_pairs(pairs: tuple[_Pair, ...]) -> str:
    if not pairs:
        return "-"
    return ";".join(f"({_fmt_shift(a)},{slope!r})" for a, slope in pairs)


def h_serialize(params: HFunctionParams) -> str:
    """Canonical one-line text form
    ``H[m,n,p,q] upper=(a,A);... lower=(b,B);...`` with ``-`` for an empty
    list. Floats print via repr, so h_parse round-trips bit for bit."""
    return (
        f"H[{params.m},{params.n},{params.p},{params.q}] "
        f"upper={_fmt_pairs(params.upper)} lower={_fmt_pairs(params.lower)}"
    )


def _parse_pairs(text: str, what: str) -> tuple[_Pair, ...]:
    if text == "-":
        return ()
    out = []
    for chunk in text.split(";"):
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ParamError(f"malformed {what} pair {chunk!r}")
        body = chunk[1:-1]
        head, _, tail = body.rpartition(",")
        if not head:
            raise ParamError(f"malformed {what} pair {chunk!r}")
        try:
            out.append((complex(head), float(tail)))
        except ValueError:
            raise ParamError(f"malformed {what} pair {chunk!r}")
    return tuple(out)


def h_parse(text: str) -> HFunctionParams:
    """Inverse of h_serialize; ParamError on anything malformed."""
    match = _H_RE.match(text.strip())
    if match is None:
        raise ParamError(f"unparseable H-function text {text!r}")
    m, n, p, q = (int(match.group(k)) for k in range(1, 5))
    upper = _parse_pairs(match.group(5), "upper")
    lower = _parse_pairs(match.group(6), "lower")
    return HFunctionParams(m=m, n=n, p=p, q=q, upper=upper, lower=lower)
