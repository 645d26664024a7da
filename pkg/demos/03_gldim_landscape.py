"""The global-dimension landscape over the stability manifold.

Random stability conditions on a Dynkin quiver never dip below the floor
(h - 2)/h, most sit above 1, and the rare ones at or below 1 make every
indecomposable semistable.  Restriction to a connected subquiver only ever
lowers the value.
"""

from collections import Counter

from sdlab import (
    catalog_for,
    classify_dynkin,
    gepner_construct,
    gldim,
    parse_quiver,
    restrict_to_subquiver,
    sample_stability,
)

q = parse_quiver("A3")
h = classify_dynkin(q).coxeter_number
floor = (h - 2.0) / h
cat = catalog_for(q)

N = 2000
values = []
full_heart = 0
for seed in range(N):
    sigma = sample_stability(q, seed)
    g = gldim(sigma)
    values.append(g)
    if g <= 1.0 and len(sigma.records) == cat.size():
        full_heart += 1

print("A3, %d random stability conditions" % N)
print("  floor (h-2)/h = %.6f" % floor)
print("  min sampled   = %.6f" % min(values))
print("  max sampled   = %.6f" % max(values))
print("  below floor   = %d" % sum(v < floor - 1e-9 for v in values))
print("  gldim <= 1    = %d (all with every indecomposable semistable: %s)"
      % (sum(v <= 1.0 for v in values), full_heart == sum(v <= 1.0 for v in values)))

# crude text histogram in bins of width 0.25
bins = Counter(min(int((v - floor) / 0.25), 11) for v in values)
print()
print("  histogram (offset above floor, bin width 0.25):")
for b in range(max(bins) + 1):
    lo = floor + 0.25 * b
    print("  %5.2f..%5.2f  %s" % (lo, lo + 0.25, "#" * (bins.get(b, 0) // 20)))

# semicontinuity under restriction: A3 -> A2 on vertices {1, 2}
print()
print("restriction A3 -> A2 on {1,2} for the Gepner point and nearby samples:")
sigma = gepner_construct(q)
sub = restrict_to_subquiver(sigma, (1, 2))
print("  gepner: gldim %.6f -> %.6f" % (gldim(sigma), gldim(sub)))
shown = 0
for seed in range(N):
    sigma = sample_stability(q, seed)
    g = gldim(sigma)
    if g <= 1.0:
        sub = restrict_to_subquiver(sigma, (1, 2))
        print("  seed %4d: gldim %.6f -> %.6f" % (seed, g, gldim(sub)))
        shown += 1
        if shown == 5:
            break
