"""
Zeros of Re f and Im f on shrinking circles
===========================================

For f(z) = z^2 + 1 we watch the zeros of Re f (alphas) and Im f (betas) on
|z| = r as r comes down from beyond the dominance radius.  While r > 1 they
alternate around the circle; at r = 1 an alpha lands on a beta, and that
angle on that circle is a root.
"""

import numpy as np

from gauss_interleave import circle_zeros, dominance_radius, find_one_root
from gauss_interleave.descent import bisect_boundary, bracket_boundary, make_family

f = np.array([1.0, 0.0, 1.0])  # ascending: 1 + 0 z + z^2
rstar = dominance_radius(f)
print(f"dominance radius r* = {rstar:.6f}")

for r in (2.0, 1.5, 1.1, 1.0, 0.8):
    s = circle_zeros(f, r)
    print(f"\nr = {r}")
    print("  alphas:", np.round(s.alphas, 4))
    print("  betas: ", np.round(s.betas, 4))
    print(f"  interleaving = {s.interleaving}, min gap = {s.min_gap:.4g}")

# %%
# The descent brackets the first radius where alternation fails, then
# bisects it down to 1e-9.

fam = make_family(f, "circle")
lo, hi = bracket_boundary(fam)
r0 = bisect_boundary(fam, lo, hi)
print(f"\nbracket ({lo:.4f}, {hi:.4f}) -> boundary r0 = {r0:.12f}")

rep = find_one_root(f, "circle")
print(f"root {rep.root}, residual {rep.residual:.1e}, bracket {rep.bracket}")
