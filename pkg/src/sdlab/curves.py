"""Global dimension bounds for stability conditions on smooth projective
curves, in the numerical-class model.

A class (r, d) has central charge Z = -d + r (beta + i H).  Genus 0 and 1
give global dimension exactly 1; genus g >= 2 gives the closed-form lower
and upper bounds coming from the pairing of a line bundle with its Serre
twist, with the upper bound optimizing the twist shift over the reals.
Desk-scale pair scans over explicit numerical classes approach the bounds
from below and serve as oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EmptyGrid, GenusTooSmall, ZeroClass


@dataclass(frozen=True)
class NumericalClass:
    r: int
    d: int

    def __post_init__(self):
        if self.r == 0 and self.d == 0:
            raise ZeroClass("the zero numerical class has no charge")


@dataclass(frozen=True)
class CurveStability:
    genus: int
    beta: float
    H: float

    def __post_init__(self):
        if self.genus < 0:
            raise GenusTooSmall("genus must be a nonnegative integer")
        if self.H <= 0:
            raise ConfigError("H must be positive")


def arccot(x: float) -> float:
    """Principal inverse cotangent with values in (0, pi)."""
    return math.pi / 2.0 - math.atan(x)


def curve_charge(cs: CurveStability, cls: NumericalClass) -> tuple[complex, float]:
    """Charge Z = -d + r (beta + i H) and its phase, normalized into (0, 2]
    so that sheaf classes (r > 0, or torsion with d > 0) land in (0, 1]."""
    z = complex(cs.beta * cls.r - cls.d, cs.H * cls.r)
    raw = math.atan2(z.imag, z.real) / math.pi
    phase = raw if raw > 0 else raw + 2.0
    return z, phase


def curve_gldim_bounds(cs: CurveStability) -> tuple[float, float]:
    """Closed-form bounds for genus at least 2.

    The lower bound pairs the trivial bundle with its Serre twist:
    1 + (arccot((beta - 2g + 2)/H) - arccot(beta/H)) / pi.  The upper bound
    relaxes the twist shift to a real variable, maximized at g - 1:
    1 + (2/pi) arctan((g - 1)/H).
    """
    g = cs.genus
    if g < 2:
        raise GenusTooSmall("closed-form bounds require genus at least 2")
    lower = 1.0 + (arccot((cs.beta - 2.0 * g + 2.0) / cs.H) - arccot(cs.beta / cs.H)) / math.pi
    upper = 1.0 + (2.0 / math.pi) * math.atan((g - 1.0) / cs.H)
    return lower, upper


def curve_gldim(cs: CurveStability) -> tuple[float, float]:
    """Global dimension of the standard stability condition as an interval;
    genus 0 and 1 give exactly (1.0, 1.0)."""
    if cs.genus <= 1:
        return 1.0, 1.0
    return curve_gldim_bounds(cs)


def curve_inf_scan(g: int, h_grid, beta: float = 0.0):
    """Rows (H, lower, upper) of the global-dimension interval over a grid
    of polarization scales."""
    hs = [float(h) for h in h_grid]
    if not hs:
        raise EmptyGrid("H grid is empty")
    rows = []
    for h in hs:
        lo, up = curve_gldim(CurveStability(genus=g, beta=beta, H=h))
        rows.append((h, lo, up))
    return rows


def shift_gap_grid(g: int, H: float, x_grid) -> np.ndarray:
    """1 + (arccot((x - (2g-2))/H) - arccot(x/H)) / pi over a grid of real
    twist shifts x; its max approaches the closed-form upper bound."""
    xs = np.asarray([float(x) for x in x_grid], dtype=float)
    a = np.pi / 2.0 - np.arctan((xs - (2.0 * g - 2.0)) / H)
    b = np.pi / 2.0 - np.arctan(xs / H)
    return 1.0 + (a - b) / np.pi


# -------------------------------------------------------------- pair oracles


def genus0_pair_sup(cs: CurveStability, a_max: int = 200) -> float:
    """Sup of phase gaps over line-bundle pairs O(a), O(b) with |a|, |b|
    bounded: Hom is nonzero iff b >= a (degree 0 maps) and Ext^1 is nonzero
    iff b <= a - 2 (Serre duality with omega = O(-2))."""
    if cs.genus != 0:
        raise ConfigError("genus 0 oracle called with genus %d" % cs.genus)
    a = np.arange(-a_max, a_max + 1, dtype=float)
    phases = np.arctan2(cs.H, cs.beta - a) / np.pi  # class (1, a)
    prefmin = np.minimum.accumulate(phases)
    hom_sup = float(np.max(phases - prefmin))
    prefmax = np.maximum.accumulate(phases)
    ext_sup = 1.0 + float(np.max(prefmax[:-2] - phases[2:]))
    return max(hom_sup, ext_sup)


def genus1_pair_sup(cs: CurveStability, r_max: int = 50, d_max: int = 50) -> float:
    """Sup of phase gaps over stable classes on an elliptic curve with
    bounded rank and degree.  Hom((r1,d1),(r2,d2)) is nonzero iff the slope
    strictly increases, i.e. r1 d2 - r2 d1 > 0; the Calabi-Yau Ext^1 pairs
    mirror the Hom pairs and are omitted."""
    if cs.genus != 1:
        raise ConfigError("genus 1 oracle called with genus %d" % cs.genus)
    rs, ds = [], []
    for d in range(1, d_max + 1):  # torsion classes
        rs.append(0)
        ds.append(d)
    for r in range(1, r_max + 1):
        for d in range(-d_max, d_max + 1):
            rs.append(r)
            ds.append(d)
    r_arr = np.array(rs, dtype=float)
    d_arr = np.array(ds, dtype=float)
    phases = np.arctan2(r_arr * cs.H, r_arr * cs.beta - d_arr) / np.pi
    best = 0.0
    chunk = 512
    for lo in range(0, len(r_arr), chunk):
        hi = min(lo + chunk, len(r_arr))
        cross = np.outer(r_arr[lo:hi], d_arr) - np.outer(d_arr[lo:hi], r_arr)
        gaps = phases[None, :] - phases[lo:hi, None]
        gaps[cross <= 0] = -np.inf
        m = float(np.max(gaps))
        if m > best:
            best = m
    return best
