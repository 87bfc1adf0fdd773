"""
A seeded batch against the independent oracle
=============================================

Random monic polynomials with coefficients in the unit disk, solved by both
descents and checked against Aberth-Ehrlich iteration.
"""

import time

import numpy as np

from gauss_interleave import aberth_roots, find_all_roots, match_root_sets
from gauss_interleave.sampling import random_suite

polys = random_suite(seed=0, count=40, degrees=(2, 10))

for method in ("circle", "line"):
    t0 = time.perf_counter()
    worst = 0.0
    for f in polys:
        roots = [r.root for r in find_all_roots(f, method)]
        worst = max(worst, match_root_sets(roots, aberth_roots(f), 1e-6).max_distance)
    print(f"{method:6s}: {len(polys)} polynomials in {time.perf_counter() - t0:.2f}s, "
          f"worst distance to oracle {worst:.1e}")

# %%
# Complex input on the circle method goes through f * conj(f), which has
# real coefficients; each located point is tried both as is and conjugated.

f = polys[0]
print("\ndegree", len(f) - 1, "coefficients", np.round(f, 3))
for rep in find_all_roots(f, "circle"):
    print(f"  {rep.root:.10f}  bracket {rep.bracket}")
