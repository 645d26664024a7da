"""Mass growth under Serre iteration, against the entropy ceiling.

For a stability condition sigma the t-weighted mass of S^n G grows at a
rate bounded by the categorical entropy h_t, with equality at the Gepner
point of A2 where everything is linear with slope 1/3.
"""

import math

import numpy as np

from sdlab import (
    entropy_estimate,
    gepner_construct,
    mass,
    mass_growth,
    parse_quiver,
    serre_apply,
    standard_generator,
    volume,
)

q = parse_quiver("A2")
sigma = gepner_construct(q)
G = standard_generator(q)

print("masses of S^n G at t = 0 (A2 Gepner point):")
x = G
for n in range(7):
    print("  n=%d  mass %.6f" % (n, mass(sigma, 0.0, x)))
    x = serre_apply(x)

grid = tuple(np.linspace(-2.0, 2.0, 9))
mg = mass_growth(sigma, grid, n_max=30)
print()
print("   t      growth rate   entropy h_t   slack")
for t, rate in zip(mg.t_grid, mg.rates):
    ht = entropy_estimate(q, t, n_max=30)
    print("  %+.2f   %+.6f     %+.6f    %.1e" % (t, rate, ht, ht - rate))

print()
print("phase growth window: [%.6f, %.6f]  (drift (h-2)/h = 1/3)"
      % (mg.phase_lower, mg.phase_upper))

# volume: exp of entropy at t = log(lambda); the exponent in lambda is the
# same 1/3 seen in the rates above
lams = [0.5, 1.0, 2.0, 4.0, 8.0]
vols = [volume(q, lam) for lam in lams]
slope = float(np.polyfit(np.log(lams), np.log(vols), 1)[0])
print()
print("volumes:", "  ".join("v(%g)=%.4f" % (l, v) for l, v in zip(lams, vols)))
print("log-log volume exponent: %.6f" % slope)
