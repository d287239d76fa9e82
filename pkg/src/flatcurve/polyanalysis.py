"""Polynomial rescaling, root geometry, and the exceptional sets E_k.

The dyadic rescaling of a monic polynomial keeps it monic while pushing its
roots toward the origin; E_k collects the points where the logarithmic
derivative ratio is small and slowly varying (the positions where the
oscillatory phase can be stationary).  The measures |E_k| decay geometrically
in k, which is what the alpha-sum check certifies at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npp

from flatcurve.intervals import IntervalUnion

__all__ = [
    "Polynomial",
    "RootData",
    "rescale",
    "root_data",
    "compute_Ek",
    "sum_Ek_alpha",
    "verify_gradient_bound",
    "tv_sign_change_check",
]

_POLE_RADIUS = 1e-9  # exclusion around roots of Pk' where the ratio diverges


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial with coefficients stored constant-term first."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        if not c:
            raise ValueError("polynomial needs at least one coefficient")
        if len(c) > 1 and c[-1] == 0.0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_string(cls, text: str) -> "Polynomial":
        """Parse 'c0,c1,...,cn' (constant term first)."""
        return cls(tuple(float(p) for p in text.split(",")))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    @property
    def monic(self) -> bool:
        return self.leading == 1.0

    def __call__(self, x):
        return npp.polyval(np.asarray(x, dtype=float), self.coeffs)

    def deriv(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((0.0,))
        return Polynomial(tuple(npp.polyder(self.coeffs)))

    def to_monic(self) -> tuple["Polynomial", float]:
        """Normalized copy and the scale factor it was divided by."""
        s = self.leading
        if s == 1.0:
            return self, 1.0
        return Polynomial(tuple(c / s for c in self.coeffs)), s

    def roots(self) -> np.ndarray:
        """All complex roots via the companion matrix, Newton-polished."""
        if self.degree == 0:
            return np.array([], dtype=complex)
        r = npp.polyroots(self.coeffs)
        dc = npp.polyder(self.coeffs)
        pv = npp.polyval(r, self.coeffs)
        dv = npp.polyval(r, dc)
        ok = np.abs(dv) > 1e-12 * np.maximum(1.0, np.abs(pv))
        r = r.astype(complex)
        r[ok] = r[ok] - pv[ok] / dv[ok]
        return r

    def __str__(self) -> str:
        return ",".join(f"{c:g}" for c in self.coeffs)


@dataclass(frozen=True)
class RootData:
    """Roots of P split by type, plus the critical set U of P' and P''."""

    real_roots: tuple[float, ...]
    complex_pairs: tuple[tuple[float, float], ...]  # (a, b) with b > 0
    U: tuple[float, ...]  # real roots of P' and P''


def _split_roots(roots: np.ndarray):
    tol = 1e-9
    reals, pairs = [], []
    for z in roots:
        if abs(z.imag) <= tol * (1.0 + abs(z)):
            reals.append(float(z.real))
        elif z.imag > 0:
            pairs.append((float(z.real), float(z.imag)))
    return tuple(sorted(reals)), tuple(sorted(pairs))


def _real_roots(p: Polynomial) -> list[float]:
    if p.degree < 1:
        return []
    reals, _ = _split_roots(p.roots())
    return list(reals)


def root_data(p: Polynomial) -> RootData:
    """Root decomposition of P with the merged critical set U.

    Validates m + 2n' = n and that the roots reconstruct the polynomial to
    1e-8 relative in the coefficients.
    """
    roots = p.roots()
    reals, pairs = _split_roots(roots)
    n = p.degree
    if len(reals) + 2 * len(pairs) != n:
        raise ValueError(
            f"root classification lost roots: {len(reals)} real + 2*{len(pairs)} complex != {n}"
        )
    rebuilt = p.leading * npp.polyfromroots(roots)
    scale = max(abs(c) for c in p.coeffs)
    if np.max(np.abs(rebuilt.real - np.asarray(p.coeffs))) > 1e-8 * scale:
        raise ValueError("root reconstruction residual exceeds 1e-8")
    u = sorted(set(_real_roots(p.deriv())) | set(_real_roots(p.deriv().deriv())))
    return RootData(real_roots=reals, complex_pairs=pairs, U=tuple(u))


def rescale(p: Polynomial, k: int) -> Polynomial:
    """Dyadic rescaling 2^(-nk) P(2^k x); normalizes to monic first.

    Coefficient j maps to c_j * 2^((j-n)k), so the result stays monic and
    the map is a semigroup in k.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    q, _ = p.to_monic()
    n = q.degree
    if k == 0:
        return q
    return Polynomial(tuple(c * 2.0 ** ((j - n) * k) for j, c in enumerate(q.coeffs)))


def _ek_membership(x: np.ndarray, pk: Polynomial, C1: float, d1_roots) -> np.ndarray:
    """Pointwise test of |Pk/Pk'| <= 4/C1 and (Pk/Pk')' <= 1/(8n).

    The derivative condition is the signed quantity exactly as printed,
    (Pk/Pk')' = 1 - Pk Pk'' / Pk'^2.  Points within the pole radius of a
    root of Pk' are excluded outright (the ratio diverges there).
    """
    n = pk.degree
    d1 = pk.deriv()
    d2 = d1.deriv()
    x = np.asarray(x, dtype=float)
    q = pk(x)
    qp = d1(x)
    qpp = d2(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(q / qp)
        rprime = 1.0 - q * qpp / qp**2
    ok = (ratio <= 4.0 / C1) & (rprime <= 1.0 / (8.0 * n))
    ok &= np.isfinite(ratio) & np.isfinite(rprime)
    for pole in d1_roots:
        ok &= np.abs(x - pole) > _POLE_RADIUS
    return ok


def _bisect_boundary(member, lo: float, hi: float, resolution: float) -> float:
    """Membership flips between lo and hi; shrink the bracket below resolution."""
    f_lo = bool(member(np.array([lo]))[0])
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if bool(member(np.array([mid]))[0]) == f_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def compute_Ek(p: Polynomial, k: int, C1: float, resolution: float = 1e-6) -> IntervalUnion:
    """The exceptional set of the rescaled polynomial, as an interval union.

    Sampling strategy: a uniform grid over a bounding box around all roots of
    Pk and Pk' (inflated by 8/C1 + 1), densified by geometric clusters around
    every root's real part (the set lives near roots, and its components
    shrink like 2^-k), then bisection of each membership flip down to
    ``resolution``.  Outside the box |Pk/Pk'| grows like |x|/n, so the first
    condition fails; an outer scan asserts that before trusting the box.
    """
    if p.degree < 1:
        raise ValueError("E_k is undefined for constant polynomials")
    if C1 <= 0 or resolution <= 0:
        raise ValueError("C1 and resolution must be positive")
    pk = rescale(p, k)
    d1 = pk.deriv()
    d1_roots = _real_roots(d1)
    centers = [z.real for z in pk.roots()]
    if d1.degree >= 1:
        centers += [z.real for z in d1.roots()]
    pad = 8.0 / C1 + 1.0
    lo = min(centers) - pad
    hi = max(centers) + pad

    def member(x):
        return _ek_membership(x, pk, C1, d1_roots)

    for _ in range(3):
        outer = np.concatenate(
            [np.linspace(lo - pad, lo, 17), np.linspace(hi, hi + pad, 17)]
        )
        if not np.any(member(outer)):
            break
        lo -= pad
        hi += pad
    else:
        raise RuntimeError("E_k bounding box failed to close after 3 inflations")

    samples = [np.linspace(lo, hi, 4097)]
    scales = np.geomspace(max(resolution / 4.0, 1e-12), hi - lo, 200)
    for c in sorted(set(centers)):
        samples.append(c + scales)
        samples.append(c - scales)
        samples.append(np.array([c]))
    x = np.unique(np.clip(np.concatenate(samples), lo, hi))
    m = member(x)

    intervals = []
    open_lo = None
    for i in range(x.size - 1):
        if m[i] == m[i + 1]:
            continue
        b = _bisect_boundary(member, float(x[i]), float(x[i + 1]), resolution)
        if m[i]:  # leaving the set
            intervals.append((open_lo if open_lo is not None else float(x[i]), b))
            open_lo = None
        else:  # entering the set
            open_lo = b
    if open_lo is not None:
        raise RuntimeError("E_k extends to the sampling boundary")
    return IntervalUnion(intervals)


def sum_Ek_alpha(
    p: Polynomial,
    alpha: float,
    Kmax: int,
    C1: float,
    resolution: float = 1e-6,
) -> tuple[float, float]:
    """Partial sum of |E_k|^alpha for k <= Kmax and a tail-decay estimate.

    The tail ratio is the per-k geometric factor fitted (log-linear) over the
    last quartile of the terms; a ratio < 1 certifies geometric decay.  An
    all-zero tail reports ratio 0.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    measures = [compute_Ek(p, k, C1, resolution).measure for k in range(Kmax + 1)]
    terms = np.array([mu**alpha for mu in measures])
    partial = float(np.sum(terms))
    q = max(4, (Kmax + 1) // 4)
    tail = terms[-q:]
    ks = np.arange(Kmax + 1)[-q:]
    pos = tail > 0
    if int(np.sum(pos)) < 2:
        return partial, 0.0
    slope = np.polyfit(ks[pos], np.log2(tail[pos]), 1)[0]
    return partial, float(2.0**slope)


def verify_gradient_bound(p: Polynomial, delta: float, samples: int = 4096, seed: int = 0) -> float:
    """Empirical constant in |P'(z)| >= C delta^(n-1) away from the critical set.

    U is the set of real roots of P' and P''.  On {dist(z, U) > delta} the
    function |P'| is monotone between consecutive critical points, so its
    minimum sits at the boundary offsets u +- delta; random samples are added
    on top as a sanity sweep.  Returns min |P'(z)| / delta^(n-1).
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    q, _ = p.to_monic()
    n = q.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    d1 = q.deriv()
    u = sorted(set(_real_roots(d1)) | set(_real_roots(d1.deriv())))
    if not u:
        return float(np.abs(d1(0.0))) / delta ** (n - 1)

    u_arr = np.array(u)
    eps = delta * 1e-12
    pts = [u_arr + delta + eps, u_arr - delta - eps]
    rng = np.random.default_rng(seed)
    lo, hi = u[0] - 2.0 - delta, u[-1] + 2.0 + delta
    pts.append(rng.uniform(lo, hi, size=samples))
    z = np.concatenate(pts)
    dist = np.min(np.abs(z[:, None] - u_arr[None, :]), axis=1)
    z = z[dist > delta]
    return float(np.min(np.abs(d1(z)))) / delta ** (n - 1)


def tv_sign_change_check(values, m: int, C: float, noise_floor: float = 1e-12) -> bool:
    """Discrete total-variation check: TV <= 2 (m+1) C.

    ``values`` samples a C^1 function on a window outside which it is
    negligible; ``m`` is the number of sign changes of its derivative and C a
    uniform bound.  Raises when the sampled differences oscillate at the grid
    scale (the discrete TV would then be meaningless).
    """
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        raise ValueError("need at least 3 samples")
    if C < float(np.max(np.abs(v))):
        raise ValueError("C must dominate max |f|")
    d = np.diff(v)
    floor = noise_floor * max(1.0, float(np.max(np.abs(v))))
    sig = d[np.abs(d) > floor]
    if sig.size >= 2:
        flips = np.flatnonzero(np.sign(sig[1:]) != np.sign(sig[:-1]))
        if flips.size > max(4, sig.size // 4):
            raise ValueError(
                f"undersampled oscillation: {flips.size} sign flips in {sig.size} differences"
            )
    tv = float(np.sum(np.abs(d)))
    return tv <= 2.0 * (m + 1) * C
