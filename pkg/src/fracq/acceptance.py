r"""The acceptance suite: thirteen numbered checks, each an independent
cross-validation of one claim the package rests on.

Every check reports a single scalar ``measured`` against a ``tolerance``;
an optional override tightens or loosens the tolerance uniformly (useful
for demonstrating the failure reporting). Checks that bundle several
sub-assertions (the operator checks) normalize each sub-error by its own
bound and report the worst ratio against tolerance 1.

Check 5 deserves a note: it holds the two-term small-time probability law
to a 1% pointwise agreement (relative to the deviation from 1) across
t in [1e-4, 1e-2]. At the top of that window the neglected next-order
term is about 8% of the deviation, so the check fails by construction,
not by implementation accident; the measured ratio scales like t^alpha
and passes only below t ~ 2e-4. It is kept faithful and red rather than
loosened.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .foxh import h_eval, ml_h_params
from .fractional import (
    SampledFunction,
    caputo_derivative,
    composition_identity_residual,
    riesz_derivative,
)
from .mittag_leffler import ml_eval, ml_eval_ray
from .model import (
    BoxModel,
    energy_expectation,
    energy_product_form,
    t_product_form,
    total_probability,
    total_probability_batch,
    total_probability_small_t,
    v_eff,
)
from .oracle import BromwichConfig, bromwich_invert, ml_highprec, t_via_pole_plus_integral
from .special import i_pow

__all__ = ["CriterionResult", "ALL_CRITERIA", "format_report", "run_all"]


@dataclass(frozen=True)
class CriterionResult:
    index: int
    label: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        rel = "<=" if self.passed else ">"
        out = (
            f"c{self.index:02d} {status} {self.label}: "
            f"measured {self.measured:.3e} {rel} {self.tolerance:.3e}"
        )
        if self.detail:
            out += f" ({self.detail})"
        return out


def _result(index, label, measured, tolerance, detail="") -> CriterionResult:
    return CriterionResult(
        index=index,
        label=label,
        measured=float(measured),
        tolerance=float(tolerance),
        passed=bool(measured <= tolerance),
        detail=detail,
    )


def criterion_1(tol: float | None = None) -> CriterionResult:
    """alpha=1 reduces the time factor to the plain exponential."""
    tol = 1e-12 if tol is None else tol
    ts = np.linspace(0.0, 10.0, 200)
    worst = 0.0
    for lam in (-1.0, -4.0):
        got = ml_eval_ray(1.0, lam, ts)
        ref = np.exp(1j * lam * ts)
        worst = max(worst, float(np.abs(got - ref).max()))
    return _result(1, "euler limit at alpha=1", worst, tol, "lambda in {-1,-4}")


def criterion_2(tol: float | None = None) -> CriterionResult:
    """The series evaluation equals the pole-plus-cut-integral route."""
    tol = 1e-6 if tol is None else tol
    worst, where = 0.0, ""
    for alpha in (0.3, 0.5, 0.7):
        for lam in (-1.0, -4.0):
            for t in (0.1, 0.5, 1.0, 2.0, 5.0):
                a = t_via_pole_plus_integral(alpha, lam, t)
                b = ml_eval(alpha, 1.0, lam * i_pow(alpha) * t**alpha)
                d = abs(a - b)
                if d > worst:
                    worst, where = d, f"worst at alpha={alpha}, lambda={lam}, t={t}"
    return _result(2, "pole-plus-integral route matches series", worst, tol, where)


def criterion_3(tol: float | None = None) -> CriterionResult:
    """Contour inversion of the transform matches the high-precision series."""
    tol = 1e-8 if tol is None else tol
    cfg = BromwichConfig()
    ts = np.geomspace(0.01, 10.0, 20)
    worst, where = 0.0, ""
    for alpha in (0.3, 0.5, 0.9):
        for t in ts:
            z = -i_pow(alpha) * t**alpha
            ref = complex(ml_highprec(alpha, 1.0, z, digits=60))
            got = bromwich_invert(cfg, alpha, -1.0, float(t))
            d = abs(got - ref)
            if d > worst:
                worst, where = d, f"worst at alpha={alpha}, t={t:.3g}"
    return _result(3, "contour inversion matches high precision", worst, tol, where)


def criterion_4(tol: float | None = None) -> CriterionResult:
    """The residue-series H-function evaluation reproduces the function."""
    tol = 1e-9 if tol is None else tol
    radii = np.linspace(0.25, 2.0, 8)
    angles = np.linspace(0.0, 2.0 * math.pi, 8, endpoint=False) + 0.17
    worst, where = 0.0, ""
    for alpha in (0.3, 0.5, 1.0 / math.sqrt(2.0)):
        params = ml_h_params(alpha)
        for r in radii:
            for th in angles:
                z = r * cmath.exp(1j * th)
                got = h_eval(params, -z)
                ref = complex(ml_highprec(alpha, 1.0, z, digits=60))
                d = abs(got - ref)
                if d > worst:
                    worst, where = d, f"worst at alpha={alpha:.4g}, z={z:.3g}"
    return _result(4, "h-function representation matches series", worst, tol, where)


def criterion_5(tol: float | None = None) -> CriterionResult:
    """Two-term small-time probability law, pointwise to 1% of the decay.

    Fails by construction at the top of the window: the neglected
    t^{2 alpha} term is ~8% of the deviation from 1 at t=0.01. See the
    module docstring; kept faithful rather than loosened.
    """
    tol = 1e-2 if tol is None else tol
    model = BoxModel(a=math.pi, n=1, alpha=0.5)
    worst, where = 0.0, ""
    for t in np.geomspace(1e-4, 1e-2, 25):
        exact = total_probability(model, float(t))
        law = total_probability_small_t(model, float(t))
        ratio = abs(exact - law) / (1.0 - exact)
        if ratio > worst:
            worst, where = ratio, f"worst at t={t:.3g}"
    return _result(5, "small-time probability law", worst, tol, where)


def criterion_6(tol: float | None = None) -> CriterionResult:
    """Large-time decay carries coefficient 1: lambda^2 t^{2a} |T|^2 -> 1."""
    tol = 0.02 if tol is None else tol
    model = BoxModel(a=math.pi, n=1, alpha=0.5)
    t = 1e4
    value = model.lam**2 * t ** (2 * model.alpha) * total_probability(model, t)
    return _result(
        6, "large-time decay coefficient", abs(value - 1.0), tol, f"value {value:.6f}"
    )


def criterion_7(tol: float | None = None) -> CriterionResult:
    """Total probability never exceeds 1 on the scanned grid."""
    tol = 1e-10 if tol is None else tol
    ts = np.linspace(0.0, 100.0, 10_000)
    worst, where = -math.inf, ""
    for alpha in (0.3, 0.5, 0.7, 0.9):
        for n in (1, 2, 3):
            model = BoxModel(a=math.pi, n=n, alpha=alpha)
            excess = float(total_probability_batch(model, ts).max()) - 1.0
            if excess > worst:
                worst, where = excess, f"worst at alpha={alpha}, n={n}"
    return _result(7, "probability bound", worst, tol, where)


def criterion_8(tol: float | None = None) -> CriterionResult:
    """Product of decaying and oscillating parts rebuilds the time factor."""
    tol = 1e-4 if tol is None else tol
    worst, where = 0.0, ""
    for alpha in (0.5, 0.7):
        model = BoxModel(a=math.pi, n=1, alpha=alpha)
        for t in np.linspace(2.0 / 50.0, 2.0, 50):
            got = t_product_form(model, float(t))
            ref = ml_eval(alpha, 1.0, model.lam * i_pow(alpha) * t**alpha)
            d = abs(got - ref)
            if d > worst:
                worst, where = d, f"worst at alpha={alpha}, t={t:.3g}"
    return _result(8, "product form rebuilds the time factor", worst, tol, where)


def criterion_9(tol: float | None = None) -> CriterionResult:
    """The effective potential vanishes in the classical limit."""
    tol = 1e-8 if tol is None else tol
    model = BoxModel(a=math.pi, n=1, alpha=1.0)
    worst = 0.0
    for t in np.linspace(0.1, 10.0, 100):
        worst = max(worst, abs(v_eff(model, float(t)).value))
    return _result(9, "effective potential vanishes at alpha=1", worst, tol)


def criterion_10(tol: float | None = None) -> CriterionResult:
    """Energy from the dissipation integral matches the direct expectation."""
    tol = 1e-4 if tol is None else tol
    model = BoxModel(a=math.pi, n=1, alpha=0.5)
    worst, where = 0.0, ""
    for t in np.linspace(2.0 / 25.0, 2.0, 25):
        a = energy_product_form(model, float(t))
        b = energy_expectation(model, float(t))
        rel = abs(a - b) / abs(b)
        if rel > worst:
            worst, where = rel, f"worst at t={t:.3g}"
    return _result(10, "energy via dissipation integral", worst, tol, where)


def criterion_11(tol: float | None = None) -> CriterionResult:
    """Conjugating the i^alpha branch leaves |T| unchanged."""
    tol = 1e-12 if tol is None else tol
    worst = 0.0
    for alpha in (0.3, 0.5, 0.7, 0.9, 1.0):
        ia = i_pow(alpha)
        for lam in (-1.0, -4.0):
            for t in (0.1, 0.5, 1.0, 2.0, 5.0):
                z = lam * t**alpha
                plus = abs(ml_eval(alpha, 1.0, z * ia))
                minus = abs(ml_eval(alpha, 1.0, z * ia.conjugate()))
                worst = max(worst, abs(plus - minus))
    return _result(11, "branch-conjugation invariance of |T|", worst, tol)


def criterion_12(tol: float | None = None) -> CriterionResult:
    """Operator checks: Caputo exactness, L1 order, Riesz multiplier,
    and the derivative-composition identity's refinement order.

    Each sub-check reports error/bound (or required/measured order);
    the criterion value is the worst such ratio against 1.
    """
    tol = 1.0 if tol is None else tol
    from scipy.special import gamma as G

    ratios: list[tuple[str, float]] = []
    t = np.linspace(0.0, 1.0, 65)

    out = caputo_derivative(SampledFunction(t, np.full_like(t, 2.25)), 0.5)
    exact_zero = float(np.abs(out.values).max())
    ratios.append(("caputo-const", 0.0 if exact_zero == 0.0 else math.inf))

    out = caputo_derivative(SampledFunction(t, t), 0.5)
    err = float(np.abs(out.values - t**0.5 / G(1.5)).max())
    ratios.append(("caputo-linear", err / 1e-13))

    errs = []
    for n_cells in (128, 256, 512):
        tt = np.linspace(0.0, 1.0, n_cells + 1)
        got = caputo_derivative(SampledFunction(tt, tt**2), 0.5).values
        ref = 2.0 * tt**1.5 / G(2.5)
        errs.append(float(np.abs(got - ref).max()))
    order = min(math.log2(errs[i] / errs[i + 1]) for i in range(2))
    ratios.append(("l1-order", 1.4 / order))

    x = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    f = np.sin(x) + 0.3 * np.cos(2.0 * x)
    got = riesz_derivative(SampledFunction(x, f, periodic=True), 2.0).values
    ref = -np.sin(x) - 1.2 * np.cos(2.0 * x)
    ratios.append(("riesz-q2", float(np.abs(got - ref).max()) / 1e-10))

    for alpha in (0.5, 0.7):
        res = []
        for n_cells in (256, 512, 1024):
            tt = np.linspace(0.0, 1.0, n_cells + 1)
            res.append(composition_identity_residual(SampledFunction(tt, tt**2), alpha))
        order = min(math.log2(res[i] / res[i + 1]) for i in range(2))
        ratios.append((f"composition-order-a{alpha}", (1.0 - alpha + 0.4) / order))

    name, worst = max(ratios, key=lambda kv: kv[1])
    detail = "; ".join(f"{k}={v:.3g}" for k, v in ratios)
    return _result(12, f"fractional operator checks (worst: {name})", worst, tol, detail)


def criterion_13(tol: float | None = None) -> CriterionResult:
    """The sampled time factor satisfies its defining eigen-relation under
    the discrete Caputo derivative (relative error on the upper half of
    the grid, where the scheme's start-up error has washed out)."""
    tol = 5e-3 if tol is None else tol
    alpha, lam = 0.5, -1.0
    t = np.linspace(0.0, 1.0, 4097)
    series = ml_eval_ray(alpha, lam, t)
    got = caputo_derivative(SampledFunction(t, series), alpha).values
    ref = i_pow(alpha) * lam * series
    half = t >= 0.5
    rel = float((np.abs(got[half] - ref[half]) / np.abs(ref[half])).max())
    return _result(13, "eigen-relation under the fractional derivative", rel, tol)


ALL_CRITERIA = (
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


def run_all(tol_override: float | None = None) -> list[CriterionResult]:
    """Run every criterion; a tolerance override applies to all of them."""
    return [fn(tol_override) for fn in ALL_CRITERIA]


def format_report(results: list[CriterionResult]) -> str:
    lines = [r.line() for r in results]
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} criteria passed")
    return "\n".join(lines)
