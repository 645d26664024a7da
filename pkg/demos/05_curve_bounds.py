"""Global dimension of the standard stability conditions on smooth curves.

Genus 0 and 1 pin the value at exactly 1; the pair sups sampled from actual
line-bundle and stable-class pairs approach 1 from below.  Genus g >= 2
gives an interval strictly above 1 that collapses to 1 as the polarization
H grows, with the closed-form upper bound realized by a real twist shift.
"""

import numpy as np

from sdlab import (
    CurveStability,
    curve_gldim,
    curve_inf_scan,
    genus0_pair_sup,
    genus1_pair_sup,
    shift_gap_grid,
)

print("genus 0:", curve_gldim(CurveStability(genus=0, beta=0.0, H=1.0)))
print("genus 1:", curve_gldim(CurveStability(genus=1, beta=0.0, H=1.0)))
print("  pair sup g=0 (|a| <= 200):", "%.8f" % genus0_pair_sup(
    CurveStability(genus=0, beta=0.0, H=1.0)))
print("  pair sup g=1 (r, |d| <= 50):", "%.8f" % genus1_pair_sup(
    CurveStability(genus=1, beta=0.0, H=1.0)))

print()
print("genus 2, beta = 0: interval over polarization scale H")
print("    H        lower       upper")
for H, lo, up in curve_inf_scan(2, np.logspace(-1, 3, 9)):
    print("  %8.2f   %.6f   %.6f" % (H, lo, up))
print("the infimum over H is 1, never attained: lower stays > 1")

print()
print("genus 5 at H = 1 for comparison:")
lo, up = curve_gldim(CurveStability(genus=5, beta=0.0, H=1.0))
print("  [%.6f, %.6f]" % (lo, up))

# where the upper bound comes from: the phase gap over a real twist shift x
# peaks at x = g - 1, halfway between the integer twists 0 and 2g - 2
g, H = 2, 1.0
xs = np.linspace(0.0, 2.0 * g - 2.0, 41)
gaps = shift_gap_grid(g, H, xs)
k = int(np.argmax(gaps))
print()
print("genus 2 twist-shift gap at H = 1: endpoints %.6f, peak %.6f at x = %.2f"
      % (gaps[0], gaps[k], xs[k]))
