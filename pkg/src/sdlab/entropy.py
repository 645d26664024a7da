"""Categorical entropy and Serre dimension estimators.

The entropy series tabulates dim Hom(G, S^n G[m]) for the projective
generator G.  Entropy at parameter t is the growth rate of
f_n(t) = sum_m dim * exp(-m t); the estimators fit a + b/n over a
deterministic subsequence and report the extrapolated intercept.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .derived import hom_poincare, require_nonzero, serre_apply, standard_generator
from .errors import BudgetExceeded, ConfigError, EmptyGrid
from .quivers import Quiver, classify_dynkin

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class EntropySeries:
    quiver: Quiver
    n_max: int
    levels: tuple  # levels[n] is a dict m -> dim Hom(G, S^n G[m])
    m_minus: tuple  # -min support per n
    m_plus: tuple  # -max support per n

    def log_f(self, n: int, t: float) -> float:
        """log f_n(t) via a log-sum-exp, safe for large |m t|."""
        terms = [math.log(d) - m * t for m, d in self.levels[n].items()]
        top = max(terms)
        return top + math.log(sum(math.exp(v - top) for v in terms))

    def total_dim(self, n: int) -> int:
        return sum(self.levels[n].values())

    def csv(self) -> str:
        lines = ["n,m,dim"]
        for n, lev in enumerate(self.levels):
            for m in sorted(lev):
                lines.append("%d,%d,%d" % (n, m, lev[m]))
        return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=64)
def entropy_series(q: Quiver, n_max: int, budget: int = DEFAULT_BUDGET) -> EntropySeries:
    if n_max < 1:
        raise ConfigError("n_max must be at least 1")
    g = standard_generator(q)
    require_nonzero(g, "generator")
    levels, mins, maxs = [], [], []
    x = g
    for n in range(n_max + 1):
        lev = hom_poincare(g, x)
        if not lev:
            raise AssertionError("generator misses a power of its Serre orbit")
        total = sum(lev.values())
        if total > budget:
            raise BudgetExceeded(
                "hom dimensions reached %d at n=%d (budget %d)" % (total, n, budget)
            )
        levels.append(dict(lev))
        mins.append(-min(lev))
        maxs.append(-max(lev))
        if n < n_max:
            x = serre_apply(x, 1)
    return EntropySeries(q, n_max, tuple(levels), tuple(mins), tuple(maxs))


def _fit_intercept(ns, ys) -> float:
    """Least-squares fit of y = a + b/n; returns a (the n -> infinity limit)."""
    if len(ns) == 1:
        return ys[0]
    xs = np.array([1.0 / n for n in ns])
    b, a = np.polyfit(xs, np.array(ys), 1)
    return float(a)


def _sample_points(q: Quiver, n_max: int) -> list[int]:
    dyn = classify_dynkin(q)
    if dyn is not None:
        h = dyn.coxeter_number
        ns = [n for n in range(h, n_max + 1) if n % h == 0]
        if len(ns) >= 2:
            return ns
    lo = max(1, n_max - n_max // 2)
    return list(range(lo, n_max + 1))


def entropy_estimate(
    q: Quiver, t: float, n_max: int = 30, budget: int = DEFAULT_BUDGET
) -> float:
    """Categorical entropy h_t of the Serre functor, extrapolated from the
    series.  On Dynkin quivers the sequence (1/n) log f_n is sampled at
    multiples of the Coxeter number, where it is affine in 1/n and the fit
    is exact; otherwise the tail half of the range is used."""
    series = entropy_series(q, n_max, budget)
    ns = _sample_points(q, n_max)
    ys = [series.log_f(n, t) / n for n in ns]
    return _fit_intercept(ns, ys)


@dataclass(frozen=True)
class SerreDims:
    upper: float
    lower: float
    exact: Fraction | None

    def __post_init__(self):
        if self.upper < self.lower - 1e-12:
            raise AssertionError("upper Serre dimension below lower")


def sdim_estimate(q: Quiver, n_max: int = 30, budget: int = DEFAULT_BUDGET) -> SerreDims:
    """Upper and lower Serre dimension from the shift-support growth of
    S^n G, windowed over the tail half; the exact field carries
    (h - 2) / h on Dynkin quivers and None otherwise."""
    series = entropy_series(q, n_max, budget)
    lo = max(1, n_max - n_max // 2)
    window = range(lo, n_max + 1)
    upper = max(series.m_minus[n] / n for n in window)
    lower = max(series.m_plus[n] / n for n in window)
    dyn = classify_dynkin(q)
    exact = Fraction(dyn.coxeter_number - 2, dyn.coxeter_number) if dyn else None
    return SerreDims(upper=upper, lower=lower, exact=exact)


def volume(q: Quiver, lam: float, n_max: int = 30, budget: int = DEFAULT_BUDGET) -> float:
    """exp of the entropy at t = log(lambda); lambda must be positive."""
    if lam <= 0:
        raise ConfigError("volume scale factor must be positive")
    return math.exp(entropy_estimate(q, math.log(lam), n_max, budget))


@dataclass(frozen=True)
class EntropyProfile:
    slope: float
    intercept: float
    residual: float
    c_hat: complex  # slope + i * intercept / pi


def entropy_profile(
    q: Quiver, t_grid, n_max: int = 30, budget: int = DEFAULT_BUDGET
) -> EntropyProfile:
    """Fit h_t = slope * t + intercept over the grid; residual is the max
    absolute deviation.  A tiny residual certifies affine entropy."""
    ts = [float(t) for t in t_grid]
    if not ts:
        raise EmptyGrid("entropy profile needs a nonempty t grid")
    if len(ts) < 3:
        raise ConfigError("entropy profile needs at least 3 grid points")
    hs = [entropy_estimate(q, t, n_max, budget) for t in ts]
    slope, intercept = np.polyfit(np.array(ts), np.array(hs), 1)
    fitted = slope * np.array(ts) + intercept
    residual = float(np.max(np.abs(fitted - np.array(hs))))
    return EntropyProfile(
        slope=float(slope),
        intercept=float(intercept),
        residual=residual,
        c_hat=complex(float(slope), float(intercept) / math.pi),
    )


def profile_csv(t_grid, values) -> str:
    lines = ["t,h_t"]
    for t, h in zip(t_grid, values):
        lines.append("%r,%r" % (float(t), float(h)))
    return "\n".join(lines) + "\n"
