"""Convex flat curves and their curvature-condition checkers.

A curve gamma lives on [0, oo) with gamma(0) = gamma'(0) = 0 and is extended
to the negative axis by parity.  The checkers sample log-spaced grids and
produce verdicts for the theorem conditions (i)-(iv), the literature
conditions (CWW, CZ, wCZ), and the doubling conditions (D, ID), together
with witness points and the estimated curvature constant C1 = inf t g''/g'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

__all__ = [
    "CurveSpec",
    "ConditionReport",
    "CurveRangeError",
    "CheckConfig",
    "eval_curve",
    "check_theorem_conditions",
    "check_literature_conditions",
    "check_doubling",
    "full_report",
    "make_grid",
    "corpus",
    "get_curve",
    "curve_from_family",
]


class CurveRangeError(ValueError):
    """Evaluation left the finite range of the curve (overflow or t > t_hi)."""

    def __init__(self, name: str, t, order: int):
        self.t = t
        super().__init__(f"curve {name!r}: non-finite value at t={t!r} (order {order})")


@dataclass(frozen=True)
class CurveSpec:
    """A convex curve given by vectorized evaluators on t >= 0.

    ``gamma``, ``dgamma``, ``d2gamma`` (and optionally ``d3gamma``) take a
    nonnegative float array and return an array.  ``parity`` ("odd" or
    "even") fixes the extension to t < 0.  ``t_lo``/``t_hi`` bound the range
    where derivative ratios are numerically meaningful: below ``t_lo`` the
    evaluators may underflow to exactly 0, above ``t_hi`` they overflow.
    Evaluators must be reentrant; everything here is pure.
    """

    name: str
    gamma: Callable[[np.ndarray], np.ndarray]
    dgamma: Callable[[np.ndarray], np.ndarray]
    d2gamma: Callable[[np.ndarray], np.ndarray]
    d3gamma: Optional[Callable[[np.ndarray], np.ndarray]] = None
    parity: str = "odd"
    t_lo: float = 0.0
    t_hi: float = math.inf

    def __post_init__(self):
        if self.parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")


# Parity signs for (gamma, gamma', gamma'', gamma''') at negative arguments.
_SIGNS = {"odd": (-1.0, 1.0, -1.0, 1.0), "even": (1.0, -1.0, 1.0, -1.0)}


def _evaluate(curve: CurveSpec, t: np.ndarray, order: int) -> np.ndarray:
    """Vectorized evaluation with parity extension; no finiteness checks."""
    t = np.asarray(t, dtype=float)
    at = np.abs(t)
    if order == 0:
        vals = curve.gamma(at)
    elif order == 1:
        vals = curve.dgamma(at)
    elif order == 2:
        vals = curve.d2gamma(at)
    elif order == 3:
        if curve.d3gamma is None:
            raise ValueError(f"curve {curve.name!r} has no third derivative")
        vals = curve.d3gamma(at)
    else:
        raise ValueError(f"order must be in 0..3, got {order}")
    sign = _SIGNS[curve.parity][order]
    return np.where(t < 0, sign * vals, vals)


def eval_curve(curve: CurveSpec, t, order: int = 0):
    """Evaluate gamma / gamma' / gamma'' at t, with parity extension.

    For order >= 1 the value at t = 0 is the right limit 0 (the flatness
    hypothesis).  Raises CurveRangeError when |t| exceeds the curve's finite
    range or the evaluator returns a non-finite value.
    """
    if order not in (0, 1, 2):
        raise ValueError(f"order must be one of 0, 1, 2, got {order}")
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    t_arr = np.atleast_1d(t_arr)
    if np.any(np.abs(t_arr) > curve.t_hi):
        bad = t_arr[np.abs(t_arr) > curve.t_hi][0]
        raise CurveRangeError(curve.name, float(bad), order)
    vals = _evaluate(curve, t_arr, order)
    if order == 1:
        vals = np.where(t_arr == 0.0, 0.0, vals)
    if not np.all(np.isfinite(vals)):
        bad = t_arr[~np.isfinite(vals)][0]
        raise CurveRangeError(curve.name, float(bad), order)
    return float(vals[0]) if scalar else vals


@dataclass
class CheckConfig:
    """Tolerances shared by the condition checkers."""

    mono_tol: float = 1e-9        # relative slack for "non-increasing"
    positive_tol: float = 1e-12   # floor below which an inf counts as zero
    limit_tol: float = 1e-3       # |gamma|, |gamma'| at the bottom of the 0+ grid
    tail_slope: float = -0.1      # log-log slope marking a decaying scale-tail


@dataclass
class ConditionReport:
    """Verdicts for one curve: pass / fail / indeterminate / untested."""

    curve: str
    statuses: dict = field(default_factory=dict)
    C1: float = float("nan")
    lambda_D: float = float("nan")
    eps0: float = float("nan")
    best_cz_lambda: float = float("nan")
    h_values: np.ndarray | None = None
    witnesses: list = field(default_factory=list)
    zero_diff_counts: dict = field(default_factory=dict)

    def status(self, key: str) -> str:
        return self.statuses.get(key, "untested")

    def merge(self, other: "ConditionReport") -> "ConditionReport":
        merged = ConditionReport(curve=self.curve)
        merged.statuses = {**self.statuses, **other.statuses}
        merged.C1 = other.C1 if math.isfinite(other.C1) else self.C1
        merged.lambda_D = other.lambda_D if math.isfinite(other.lambda_D) else self.lambda_D
        merged.eps0 = other.eps0 if math.isfinite(other.eps0) else self.eps0
        merged.best_cz_lambda = (
            other.best_cz_lambda if math.isfinite(other.best_cz_lambda) else self.best_cz_lambda
        )
        merged.h_values = other.h_values if other.h_values is not None else self.h_values
        merged.witnesses = self.witnesses + other.witnesses
        merged.zero_diff_counts = {**self.zero_diff_counts, **other.zero_diff_counts}
        return merged


def make_grid(curve: CurveSpec, lo: float = 1e-4, hi: float = 1e4, n: int = 2000) -> np.ndarray:
    """Log-spaced t-grid clipped to the curve's evaluable range.

    Default 2000 points on [1e-4, 1e4]; curves with e^(-1/t) factors clip the
    bottom (ratio underflow) and e^t growth clips the top (overflow).
    """
    lo = max(lo, curve.t_lo if curve.t_lo > 0 else lo)
    hi = min(hi, curve.t_hi)
    if not hi / lo >= 1e4:
        raise ValueError(f"curve {curve.name!r}: evaluable range [{lo}, {hi}] spans < 4 decades")
    return np.geomspace(lo, hi, n)


def _nonincreasing(vals: np.ndarray, grid: np.ndarray, tol: float):
    """(ok, first-witness list, #exact-zero diffs) for a non-increasing check."""
    diffs = np.diff(vals)
    mags = np.maximum(np.abs(vals[:-1]), np.abs(vals[1:]))
    bad = diffs > tol * mags
    zeros = int(np.sum(diffs == 0.0))
    if not np.any(bad):
        return True, [], zeros
    idx = int(np.argmax(diffs / np.maximum(mags, 1e-300)))
    return False, [(float(grid[idx + 1]), float(diffs[idx]))], zeros


def _refine_min(f: Callable[[float], float], a: float, b: float, iters: int = 80) -> float:
    """Golden-section minimum of a smooth scalar function on [a, b]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return min(fc, fd)


def check_theorem_conditions(
    curve: CurveSpec, grid: np.ndarray | None = None, config: CheckConfig | None = None
) -> ConditionReport:
    """Verdicts for conditions (i)-(iv) plus the estimated constant C1.

    (i)   gamma, gamma' -> 0 as t -> 0+ (geometric grid down to 1e-8);
    (ii)  gamma''/gamma' non-increasing across the grid;
    (iii) inf t gamma''/gamma' > 0, refined locally around the discrete argmin;
    (iv)  gamma'' monotone (sign of gamma''' when available, else differences).
    """
    cfg = config or CheckConfig()
    if grid is None:
        grid = make_grid(curve)
    if grid.size < 100:
        raise ValueError("grid must have at least 100 points")
    rep = ConditionReport(curve=curve.name)

    g0 = _evaluate(curve, grid, 0)
    g1 = _evaluate(curve, grid, 1)
    g2 = _evaluate(curve, grid, 2)

    # (i): right limits at 0 on a geometric sub-grid; underflow to 0 is fine.
    small = np.geomspace(1e-8, 1e-2, 25)
    s0 = np.abs(_evaluate(curve, small, 0))
    s1 = np.abs(_evaluate(curve, small, 1))
    lim_ok = (
        np.all(np.isfinite(s0))
        and np.all(np.isfinite(s1))
        and s0[0] <= cfg.limit_tol
        and s1[0] <= cfg.limit_tol
        and s0[0] <= s0[-1] + cfg.limit_tol
        and s1[0] <= s1[-1] + cfg.limit_tol
    )
    rep.statuses["i"] = "pass" if lim_ok else "fail"
    if not lim_ok:
        rep.witnesses.append(("i", float(small[0]), float(max(s0[0], s1[0]))))

    if np.any(g1 == 0.0) or not np.all(np.isfinite(g1)) or not np.all(np.isfinite(g2)):
        t_bad = grid[(g1 == 0.0) | ~np.isfinite(g1) | ~np.isfinite(g2)][0]
        rep.statuses["ii"] = "indeterminate"
        rep.statuses["iii"] = "indeterminate"
        rep.witnesses.append(("ii", float(t_bad), float("nan")))
        rep.witnesses.append(("iii", float(t_bad), float("nan")))
    else:
        ratio = g2 / g1
        ok, wit, zeros = _nonincreasing(ratio, grid, cfg.mono_tol)
        rep.statuses["ii"] = "pass" if ok else "fail"
        rep.zero_diff_counts["ii"] = zeros
        rep.witnesses += [("ii", t, m) for t, m in wit]

        tg = grid * ratio
        j = int(np.argmin(tg))
        c1 = float(tg[j])
        lo = grid[max(j - 1, 0)]
        hi = grid[min(j + 1, grid.size - 1)]
        if hi > lo:
            def tg_of(t: float) -> float:
                t_arr = np.array([t])
                return float(t * _evaluate(curve, t_arr, 2)[0] / _evaluate(curve, t_arr, 1)[0])

            c1 = min(c1, _refine_min(tg_of, float(lo), float(hi)))
        rep.C1 = c1
        if c1 > cfg.positive_tol:
            rep.statuses["iii"] = "pass"
            rep.lambda_D = math.exp(2.0 / c1)
            rep.eps0 = c1
        else:
            rep.statuses["iii"] = "fail"
            rep.witnesses.append(("iii", float(grid[j]), c1))

    # (iv): one sign for gamma''' (or for the differences of gamma'').
    if curve.d3gamma is not None:
        g3 = _evaluate(curve, grid, 3)
        scale = np.maximum(np.abs(g2) / np.maximum(grid, 1e-300), 1e-300)
        up_bad = g3 < -cfg.mono_tol * scale
        dn_bad = g3 > cfg.mono_tol * scale
    else:
        d = np.diff(g2)
        mags = np.maximum(np.abs(g2[:-1]), np.abs(g2[1:]))
        up_bad = d < -cfg.mono_tol * mags
        dn_bad = d > cfg.mono_tol * mags
    mono = not np.any(up_bad) or not np.any(dn_bad)
    rep.statuses["iv"] = "pass" if mono else "fail"
    if not mono:
        k = int(np.argmax(up_bad))
        rep.witnesses.append(("iv", float(grid[k]), float(g2[min(k + 1, g2.size - 1)] - g2[k])))

    rep.h_values = grid * g1 - g0
    return rep


def _tail_decays(grid: np.ndarray, q: np.ndarray, cfg: CheckConfig):
    """Log-log slope of q over the top decade; decaying tails rule out a
    uniform positive lower bound even when every grid value is positive."""
    t_hi = grid[-1]
    mask = grid >= t_hi / 10.0
    if np.sum(mask) < 4 or np.any(q[mask] <= 0):
        return True, 0.0
    slope = np.polyfit(np.log(grid[mask]), np.log(q[mask]), 1)[0]
    return slope <= cfg.tail_slope, float(slope)


def check_literature_conditions(
    curve: CurveSpec, grid: np.ndarray | None = None, config: CheckConfig | None = None
) -> ConditionReport:
    """Verdicts for (CWW), (CZ) and (wCZ).

    CWW: t g''/g' non-increasing and bounded below by a positive constant.
    CZ:  q(t) = -t^2 (g''/g')'(t) admits a uniform positive lower bound; the
         grid reports min q as the best lambda and fails when the scale-tail
         of q decays (no single lambda can work as t -> oo).
    wCZ: tested on the pairs s = 2t, where the condition reduces to
         t * (g''/g'(t) - g''/g'(2t)) >= const > 0 for every exponent M.
    """
    cfg = config or CheckConfig()
    if grid is None:
        grid = make_grid(curve)
    rep = ConditionReport(curve=curve.name)

    g1 = _evaluate(curve, grid, 1)
    g2 = _evaluate(curve, grid, 2)
    if np.any(g1 == 0.0):
        t_bad = float(grid[g1 == 0.0][0])
        for key in ("CWW", "CZ", "wCZ"):
            rep.statuses[key] = "indeterminate"
            rep.witnesses.append((key, t_bad, float("nan")))
        return rep
    ratio = g2 / g1

    tg = grid * ratio
    ok, wit, zeros = _nonincreasing(tg, grid, cfg.mono_tol)
    bounded = float(np.min(tg)) > cfg.positive_tol
    rep.statuses["CWW"] = "pass" if (ok and bounded) else "fail"
    rep.zero_diff_counts["CWW"] = zeros
    if not ok:
        rep.witnesses += [("CWW", t, m) for t, m in wit]
    elif not bounded:
        j = int(np.argmin(tg))
        rep.witnesses.append(("CWW", float(grid[j]), float(tg[j])))

    # CZ: q = -t^2 (g''/g')' = -(t^2)(g'''/g' - (g''/g')^2) when g''' exists.
    if curve.d3gamma is not None:
        g3 = _evaluate(curve, grid, 3)
        dratio = g3 / g1 - ratio**2
    else:
        dratio = np.gradient(ratio, grid)
    q = -(grid**2) * dratio
    rep.best_cz_lambda = float(np.min(q))
    if rep.best_cz_lambda <= cfg.positive_tol:
        j = int(np.argmin(q))
        rep.statuses["CZ"] = "fail"
        rep.witnesses.append(("CZ", float(grid[j]), float(q[j])))
    else:
        decays, slope = _tail_decays(grid, q, cfg)
        rep.statuses["CZ"] = "fail" if decays else "pass"
        if decays:
            rep.witnesses.append(("CZ", float(grid[-1]), slope))

    # wCZ on the slice s = 2t.
    sub = grid[2.0 * grid <= min(grid[-1], curve.t_hi)]
    r_t = _evaluate(curve, sub, 2) / _evaluate(curve, sub, 1)
    r_2t = _evaluate(curve, 2.0 * sub, 2) / _evaluate(curve, 2.0 * sub, 1)
    w = sub * (r_t - r_2t)
    if float(np.min(w)) <= cfg.positive_tol:
        j = int(np.argmin(w))
        rep.statuses["wCZ"] = "fail"
        rep.witnesses.append(("wCZ", float(sub[j]), float(w[j])))
    else:
        decays, slope = _tail_decays(sub, w, cfg)
        rep.statuses["wCZ"] = "fail" if decays else "pass"
        if decays:
            rep.witnesses.append(("wCZ", float(sub[-1]), slope))
    return rep


def check_doubling(
    curve: CurveSpec,
    C1: float,
    grid: np.ndarray | None = None,
    config: CheckConfig | None = None,
) -> tuple[bool, bool]:
    """Pointwise check of (D) with lambda = e^(2/C1) and (ID) with eps0 = C1.

    (D):  gamma'(lambda t) >= 2 gamma'(t);
    (ID): h'(t) = t gamma''(t) >= C1 h(t)/t  with  h = t gamma' - gamma.
    Both allow 1e-9 relative slack for quadrature noise.
    """
    if C1 <= 0:
        raise ValueError("C1 must be positive")
    cfg = config or CheckConfig()
    if grid is None:
        grid = make_grid(curve)
    lam = math.exp(2.0 / C1)

    sub = grid[lam * grid <= curve.t_hi]
    d_ok = bool(
        np.all(
            _evaluate(curve, lam * sub, 1)
            >= 2.0 * _evaluate(curve, sub, 1) * (1.0 - cfg.mono_tol)
        )
    )
    h = grid * _evaluate(curve, grid, 1) - _evaluate(curve, grid, 0)
    hp = grid * _evaluate(curve, grid, 2)
    id_ok = bool(np.all(hp >= C1 * h / grid * (1.0 - cfg.mono_tol)))
    return d_ok, id_ok


def full_report(
    curve: CurveSpec, grid: np.ndarray | None = None, config: CheckConfig | None = None
) -> ConditionReport:
    """Run every checker and merge the verdicts into one report."""
    if grid is None:
        grid = make_grid(curve)
    rep = check_theorem_conditions(curve, grid, config)
    rep = rep.merge(check_literature_conditions(curve, grid, config))
    if rep.status("iii") == "pass":
        d_ok, id_ok = check_doubling(curve, rep.C1, grid, config)
        rep.statuses["D"] = "pass" if d_ok else "fail"
        rep.statuses["ID"] = "pass" if id_ok else "fail"
    else:
        rep.statuses["D"] = "indeterminate"
        rep.statuses["ID"] = "indeterminate"
    return rep


# ---------------------------------------------------------------------------
# Built-in corpus
# ---------------------------------------------------------------------------

_GL24 = np.polynomial.legendre.leggauss(24)
_GL16 = np.polynomial.legendre.leggauss(16)


def _panel_quad(f, lo: np.ndarray, hi: np.ndarray, rule) -> np.ndarray:
    """Gauss-Legendre over per-point panels (lo, hi can broadcast)."""
    xi, wi = rule
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    nodes = mid[..., None] + half[..., None] * xi
    vals = f(np.maximum(nodes, 0.0))
    return half * (vals * wi).sum(axis=-1)


def _integral_gamma_dyadic(integrand, t: np.ndarray) -> np.ndarray:
    """integral_0^t of a growth-free integrand: dyadic panels from zero.

    Edges 0, 1/4, 1/2, 1, 2, 4, ... resolve the e^(-1/tau)-type transition
    near tau ~ 0.1 that a single global panel would miss.
    """
    t = np.asarray(t, dtype=float)
    tmax = float(np.max(t, initial=0.0))
    edges = [0.0, 0.25, 0.5]
    e = 1.0
    while e < tmax:
        edges.append(e)
        e *= 2.0
    edges.append(max(tmax, 1.0))
    edges = np.asarray(edges)
    total = np.zeros_like(t)
    for a, b in zip(edges[:-1], edges[1:]):
        lo = np.minimum(t, a)
        hi = np.minimum(t, b)
        total += _panel_quad(integrand, lo, hi, _GL24)
    return total


def _integral_gamma_right(integrand, t: np.ndarray, window: float = 40.0) -> np.ndarray:
    """integral_0^t of an e^tau-growth integrand: unit panels from the right.

    Mass concentrates within O(1) of tau = t; panels below t - window
    contribute a relative e^(-window) and are dropped.
    """
    t = np.asarray(t, dtype=float)
    nwin = int(window)
    total = np.zeros_like(t)
    for j in range(nwin + 1):
        hi = np.maximum(t - j, 0.0)
        lo = np.maximum(t - (j + 1), 0.0)
        total += _panel_quad(integrand, lo, hi, _GL16)
    return total


def _exp_inv(t: np.ndarray) -> np.ndarray:
    """e^(-1/t) with the flat value 0 at t = 0."""
    with np.errstate(divide="ignore"):
        return np.where(t > 0, np.exp(-1.0 / np.maximum(t, 1e-300)), 0.0)


def _power_curve(alpha: float) -> CurveSpec:
    a = float(alpha)

    def d2(t):
        with np.errstate(divide="ignore"):
            return a * (a - 1.0) * t ** (a - 2.0)

    def d3(t):
        with np.errstate(divide="ignore"):
            return a * (a - 1.0) * (a - 2.0) * t ** (a - 3.0)

    return CurveSpec(
        name=f"power-{alpha:g}",
        gamma=lambda t: t**a,
        dgamma=lambda t: a * t ** (a - 1.0),
        d2gamma=d2,
        d3gamma=d3,
        parity="odd",
    )


def _pow_log_curve(alpha: float, name: str | None = None) -> CurveSpec:
    """gamma = t^alpha log(1+t); alpha = 2 is example curve (i)."""
    a = float(alpha)

    def d1(t):
        return a * t ** (a - 1.0) * np.log1p(t) + t**a / (1.0 + t)

    def d2(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = (
                a * (a - 1.0) * t ** (a - 2.0) * np.log1p(t)
                + 2.0 * a * t ** (a - 1.0) / (1.0 + t)
                - t**a / (1.0 + t) ** 2
            )
        return np.where(t > 0, v, 0.0)

    def d3(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = (
                a * (a - 1.0) * (a - 2.0) * t ** (a - 3.0) * np.log1p(t)
                + 3.0 * a * (a - 1.0) * t ** (a - 2.0) / (1.0 + t)
                - 3.0 * a * t ** (a - 1.0) / (1.0 + t) ** 2
                + 2.0 * t**a / (1.0 + t) ** 3
            )
        return np.where(t > 0, v, 0.0)

    return CurveSpec(
        name=name or f"pow-log-{alpha:g}",
        gamma=lambda t: t**a * np.log1p(t),
        dgamma=d1,
        d2gamma=d2,
        d3gamma=d3,
        parity="odd",
    )


def _pow_exp_inv_curve(alpha: float, name: str | None = None) -> CurveSpec:
    """gamma = t^alpha e^(-1/t); alpha = 2 is example curve (ii)."""
    a = float(alpha)

    def d1(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = _exp_inv(t) * (a * t ** (a - 1.0) + t ** (a - 2.0))
        return np.where(t > 0, v, 0.0)

    def d2(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = _exp_inv(t) * (
                a * (a - 1.0) * t ** (a - 2.0)
                + (2.0 * a - 2.0) * t ** (a - 3.0)
                + t ** (a - 4.0)
            )
        return np.where(t > 0, v, 0.0)

    def d3(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = _exp_inv(t) * (
                a * (a - 1.0) * (a - 2.0) * t ** (a - 3.0)
                + (3.0 * a**2 - 9.0 * a + 6.0) * t ** (a - 4.0)
                + (3.0 * a - 6.0) * t ** (a - 5.0)
                + t ** (a - 6.0)
            )
        return np.where(t > 0, v, 0.0)

    return CurveSpec(
        name=name or f"pow-exp-inv-{alpha:g}",
        gamma=lambda t: t**a * _exp_inv(t),
        dgamma=d1,
        d2gamma=d2,
        d3gamma=d3,
        parity="odd",
        t_lo=2e-3,
    )


def _int_pow_log_curve(alpha: float) -> CurveSpec:
    a = float(alpha)

    def integrand(tau):
        return tau**a * np.log1p(tau)

    def d3(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = (
                a * (a - 1.0) * t ** (a - 2.0) * np.log1p(t)
                + 2.0 * a * t ** (a - 1.0) / (1.0 + t)
                - t**a / (1.0 + t) ** 2
            )
        return np.where(t > 0, v, 0.0)

    return CurveSpec(
        name=f"int-pow-log-{alpha:g}",
        gamma=lambda t: _integral_gamma_dyadic(integrand, t),
        dgamma=integrand,
        d2gamma=lambda t: a * t ** (a - 1.0) * np.log1p(t) + t**a / (1.0 + t),
        d3gamma=d3,
        parity="odd",
    )


def _int_pow_exp_inv_curve(alpha: float) -> CurveSpec:
    a = float(alpha)

    def integrand(tau):
        return tau**a * _exp_inv(tau)

    def d2(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = _exp_inv(t) * (a * t ** (a - 1.0) + t ** (a - 2.0))
        return np.where(t > 0, v, 0.0)

    def d3(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = _exp_inv(t) * (
                a * (a - 1.0) * t ** (a - 2.0)
                + (2.0 * a - 2.0) * t ** (a - 3.0)
                + t ** (a - 4.0)
            )
        return np.where(t > 0, v, 0.0)

    return CurveSpec(
        name=f"int-pow-exp-inv-{alpha:g}",
        gamma=lambda t: _integral_gamma_dyadic(integrand, t),
        dgamma=integrand,
        d2gamma=d2,
        d3gamma=d3,
        parity="odd",
        t_lo=2e-3,
    )


def _int_pow_atan_curve(alpha: float) -> CurveSpec:
    a = float(alpha)

    def integrand(tau):
        return tau**a * np.arctan(tau)

    def d3(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = (
                a * (a - 1.0) * t ** (a - 2.0) * np.arctan(t)
                + 2.0 * a * t ** (a - 1.0) / (1.0 + t**2)
                - 2.0 * t ** (a + 1.0) / (1.0 + t**2) ** 2
            )
        return np.where(t > 0, v, 0.0)

    return CurveSpec(
        name=f"int-pow-atan-{alpha:g}",
        gamma=lambda t: _integral_gamma_dyadic(integrand, t),
        dgamma=integrand,
        d2gamma=lambda t: a * t ** (a - 1.0) * np.arctan(t) + t**a / (1.0 + t**2),
        d3gamma=d3,
        parity="odd",
    )


def _counterexample_curve() -> CurveSpec:
    """gamma = integral_0^t e^tau e^(-1/tau) dtau: satisfies (i)-(iv) with
    C1 = 2 but fails CWW (t + 1/t increases past t=1) and CZ (2/t -> 0)."""

    def integrand(tau):
        with np.errstate(over="ignore"):
            return np.exp(tau) * _exp_inv(tau)

    def gamma(t):
        t = np.asarray(t, dtype=float)
        right = _integral_gamma_right(integrand, np.maximum(t, 4.0))
        small = _integral_gamma_dyadic(integrand, np.minimum(t, 4.0))
        return np.where(t > 4.0, right, small)

    def d2(t):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            v = np.exp(t) * _exp_inv(t) * (1.0 + 1.0 / t**2)
        return np.where(t > 0, v, 0.0)

    def d3(t):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            v = np.exp(t) * _exp_inv(t) * (1.0 + 2.0 / t**2 - 2.0 / t**3 + 1.0 / t**4)
        return np.where(t > 0, v, 0.0)

    return CurveSpec(
        name="counterexample",
        gamma=gamma,
        dgamma=lambda t: np.exp(t) * _exp_inv(t),
        d2gamma=d2,
        d3gamma=d3,
        parity="odd",
        t_lo=2e-3,
        t_hi=600.0,
    )


def corpus() -> dict[str, CurveSpec]:
    """The built-in test set: the five example curves, the counterexample,
    and the homogeneous models t^alpha."""
    curves = [
        _pow_log_curve(2.0, name="t2-log"),
        _pow_exp_inv_curve(2.0, name="t2-exp-inv"),
        _int_pow_log_curve(1.0),
        _int_pow_exp_inv_curve(1.0),
        _int_pow_atan_curve(1.0),
        _counterexample_curve(),
        _power_curve(1.5),
        _power_curve(2.0),
        _power_curve(3.0),
    ]
    return {c.name: c for c in curves}


_FAMILIES = {
    "power": _power_curve,
    "pow-log": _pow_log_curve,
    "pow-exp-inv": _pow_exp_inv_curve,
    "int-pow-log": _int_pow_log_curve,
    "int-pow-exp-inv": _int_pow_exp_inv_curve,
    "int-pow-atan": _int_pow_atan_curve,
}


def curve_from_family(family: str, alpha: float, parity: str = "odd") -> CurveSpec:
    """Build a member of a parametric family; alpha >= 1 for the integral
    families, alpha > 1 for the homogeneous powers."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown curve family {family!r}; choose from {sorted(_FAMILIES)}")
    if family == "power" and not alpha > 1:
        raise ValueError("power family needs alpha > 1")
    if family != "power" and not alpha >= 1:
        raise ValueError(f"family {family!r} needs alpha >= 1")
    c = _FAMILIES[family](alpha)
    if parity != c.parity:
        c = replace(c, parity=parity)
    return c


def get_curve(name: str) -> CurveSpec:
    """Look up a corpus curve by name (aliases: 'paper-counterexample')."""
    aliases = {"paper-counterexample": "counterexample", "t2": "power-2"}
    curves = corpus()
    key = aliases.get(name, name)
    if key not in curves:
        raise KeyError(f"unknown curve {name!r}; built-ins: {sorted(curves)}")
    return curves[key]
