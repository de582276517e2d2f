"""Diagnostics relating the integral and local limit theorems.

Everything here is an exact finite-n computation on a lattice pmf: the
Kolmogorov distance of the normalized sum to the limit law, the sup of
pmf differences over a sliding integer window, the shifted-difference sup,
the local-limit approximation error, interval probabilities, and the exact
window decomposition v*P{S=m} = (I) + (II) that drives the equivalence
argument between the window and local-error conditions.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .limit_laws import LimitLaw
from .pmf import LatticePmf, Normalization, mean_and_std, mod_deviation


@dataclass(frozen=True)
class ProofDecomposition:
    """Exact split of v*P{S=m} into a block probability (I) and a sum of
    within-window differences (II), plus the Gaussian stand-in for (I)."""

    m: int
    v: int
    lhs: float
    term_I: float
    term_II: float
    identity_residual: float
    gaussian_I_approx: float

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "v": self.v,
            "lhs": self.lhs,
            "term_I": self.term_I,
            "term_II": self.term_II,
            "identity_residual": self.identity_residual,
            "gaussian_I_approx": self.gaussian_I_approx,
        }


@dataclass(frozen=True)
class LltReport:
    """All statistics for one sum: normalization, Kolmogorov distance,
    chosen window, window/shift/local sups and their b-scaled versions,
    and residue deviations for the requested moduli."""

    n: int
    a: float
    b: float
    eps: float
    v: int
    window_diff: float
    shift_diff: float
    llt_err: float
    scaled_window_diff: float
    scaled_llt_err: float
    mod_dev: dict

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "eps": self.eps,
            "v": self.v,
            "window_diff": self.window_diff,
            "shift_diff": self.shift_diff,
            "llt_err": self.llt_err,
            "scaled_window_diff": self.scaled_window_diff,
            "scaled_llt_err": self.scaled_llt_err,
            "mod_dev": {str(d): x for d, x in self.mod_dev.items()},
        }


def kolmogorov_eps(p: LatticePmf, norm: Normalization, law: LimitLaw) -> float:
    """Sup distance between the CDF of (S - a)/b (strict-inequality
    convention) and the limit CDF, evaluated exactly at the jump points.

    At each atom both one-sided step values are compared against the
    continuous CDF, which realizes the sup of a step-vs-continuous
    comparison exactly; the two tail terms are included for completeness
    (they coincide with the extreme jump comparisons).
    """
    w = p.weights
    m = p.offset + np.arange(len(w), dtype=np.float64)
    right = np.cumsum(w)
    left = right - w
    x = (m - norm.a) / norm.b
    g = law.cdf(x)
    eps = max(
        float(np.max(np.abs(left - g))),
        float(np.max(np.abs(right - g))),
        float(g[0]),
        float(1.0 - g[-1]),
    )
    return min(eps, 1.0)


def window_sup_diff(p: LatticePmf, v: int) -> float:
    """Sup of |P{S=m} - P{S=k}| over all integer pairs with |m - k| <= v.

    The pmf is zero outside its support, so windows straddling the support
    boundary count: the support is extended by v zeros on each side and a
    monotonic-deque scan takes the max over length-(v+1) windows of
    (window max - window min), in O(N).
    """
    if v < 0:
        raise ValueError("window v must be >= 0")
    if v == 0:
        return 0.0
    w = np.concatenate([np.zeros(v), p.weights, np.zeros(v)])
    length = v + 1
    maxq: deque = deque()  # indices, values decreasing
    minq: deque = deque()  # indices, values increasing
    best = 0.0
    for i, x in enumerate(w):
        while maxq and w[maxq[-1]] <= x:
            maxq.pop()
        maxq.append(i)
        while minq and w[minq[-1]] >= x:
            minq.pop()
        minq.append(i)
        start = i - length + 1
        if maxq[0] < start:
            maxq.popleft()
        if minq[0] < start:
            minq.popleft()
        if start >= 0:
            spread = w[maxq[0]] - w[minq[0]]
            if spread > best:
                best = spread
    return float(best)


def shift_sup_diff(p: LatticePmf, v: int) -> float:
    """Sup over m of |P{S=m+v} - P{S=m}|, with zero extension."""
    k = abs(int(v))
    if k == 0:
        return 0.0
    w = p.weights
    pad = np.zeros(k)
    return float(np.max(np.abs(np.concatenate([w, pad]) - np.concatenate([pad, w]))))


def llt_error(
    p: LatticePmf,
    norm: Normalization,
    law: LimitLaw,
    extra_radius: float = 0.0,
) -> float:
    """Sup over m of |P{S=m} - g((m - a)/b)/b|.

    m ranges over the union of the support and every integer within
    b * R of a, R = effective_support_radius(1e-15) (+ extra_radius, which
    exists so tests can confirm the truncation is immaterial): points with
    zero probability but non-negligible density are scanned too.
    """
    r = law.effective_support_radius(1e-15) + extra_radius
    lo = min(p.min_support, math.ceil(norm.a - norm.b * r))
    hi = max(p.max_support, math.floor(norm.a + norm.b * r))
    m = np.arange(lo, hi + 1, dtype=np.float64)
    pm = np.zeros(len(m))
    i0 = p.min_support - lo
    pm[i0 : i0 + len(p.weights)] = p.weights
    dens = law.density((m - norm.a) / norm.b) / norm.b
    return float(np.max(np.abs(pm - dens)))


def choose_window(eps: float, b: float) -> int:
    """Window rule max(1, floor(b * sqrt(eps))) balancing the o(1/b) and
    O(eps)/v terms of the window/local-error equivalence."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError("eps must lie in [0, 1]")
    if b <= 0:
        raise ValueError("b must be > 0")
    return max(1, math.floor(b * math.sqrt(eps)))


def interval_prob(p: LatticePmf, norm: Normalization, x: float, delta: float) -> float:
    """Exact P{x <= S <= x + delta}: the mass of atoms in [x, x + delta]."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    lo = max(math.ceil(x), p.min_support)
    hi = min(math.floor(x + delta), p.max_support)
    if hi < lo:
        return 0.0
    i = lo - p.offset
    return math.fsum(p.weights[i : i + (hi - lo + 1)])


def interval_shift_diff(
    p: LatticePmf, v: int, lam: float, x_grid_step: float = 0.5
) -> float:
    """Sup over x of |P{S in [x+v, x+v+lam]} - P{S in [x, x+lam]}|.

    Both interval probabilities are piecewise constant in x with
    breakpoints where an atom enters or leaves either closed interval
    (x = m, m - lam, m - v, m - v - lam); the sup is therefore attained at
    a breakpoint or on an open piece between two of them, and evaluating
    at breakpoints plus piece midpoints is exact. x_grid_step is validated
    for contract compatibility; the enumeration does not need it.
    """
    if lam <= 0:
        raise ValueError("lambda must be > 0")
    if not 0 < x_grid_step <= 0.5:
        raise ValueError("x_grid_step must be in (0, 0.5]")
    if v == 0:
        return 0.0

    cum = np.concatenate([[0.0], np.cumsum(p.weights)])

    def mass(a: float, b: float) -> float:
        # closed-interval mass via the cumulative table
        lo = max(math.ceil(a), p.min_support) - p.offset
        hi = min(math.floor(b), p.max_support) - p.offset
        if hi < lo:
            return 0.0
        return float(cum[hi + 1] - cum[lo])

    pts = set()
    for i in range(len(p.weights)):
        if p.weights[i] == 0:
            continue
        m = p.offset + i
        pts.update((m, m - lam, m - v, m - v - lam))
    bps = sorted(pts)
    xs = [bps[0] - 1.0, bps[-1] + 1.0]
    xs.extend(bps)
    xs.extend((u + w) / 2.0 for u, w in zip(bps, bps[1:]))
    best = 0.0
    for x in xs:
        d = abs(mass(x + v, x + v + lam) - mass(x, x + lam))
        if d > best:
            best = d
    return best


def proof_decomposition(
    p: LatticePmf,
    norm: Normalization,
    law: LimitLaw,
    m: int,
    v: int,
) -> ProofDecomposition:
    """Exact decomposition v*P{S=m} = (I) + (II) over the window
    [m, m+v-1], with the Gaussian approximation of (I) evaluated at the
    window midpoint (the mean-value point itself is unobservable)."""
    if v < 1:
        raise ValueError("window v must be >= 1")
    pm = p.prob(m)
    pk = [p.prob(k) for k in range(m, m + v)]
    lhs = v * pm
    term_i = math.fsum(pk)
    term_ii = math.fsum(pm - x for x in pk)
    x_star = m + (v - 1) / 2.0
    gauss = (v - 1) / norm.b * float(law.density((x_star - norm.a) / norm.b))
    return ProofDecomposition(
        m=int(m),
        v=int(v),
        lhs=lhs,
        term_I=term_i,
        term_II=term_ii,
        identity_residual=abs(lhs - term_i - term_ii),
        gaussian_I_approx=gauss,
    )


def full_report(p: LatticePmf, law: LimitLaw, moduli, n: int = 0) -> LltReport:
    """Bundle every statistic for one sum; n is carried through for the
    report and does not affect any computation."""
    norm = mean_and_std(p)
    eps = kolmogorov_eps(p, norm, law)
    v = choose_window(eps, norm.b)
    window = window_sup_diff(p, v)
    shift = shift_sup_diff(p, v)
    llt = llt_error(p, norm, law)
    return LltReport(
        n=int(n),
        a=norm.a,
        b=norm.b,
        eps=eps,
        v=v,
        window_diff=window,
        shift_diff=shift,
        llt_err=llt,
        scaled_window_diff=norm.b * window,
        scaled_llt_err=norm.b * llt,
        mod_dev={int(d): mod_deviation(p, d) for d in moduli},
    )
