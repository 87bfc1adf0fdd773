"""
Curves Re f = 0 and Im f = 0 for a degree-8 polynomial
=====================================================

f(z) = z^8 + 0.2 z^7 - 0.1 z^6 - 0.3 z^5 - 0.1 z^3 + 0.2 z^2 - 0.3 z + 0.1.
Its roots are the crossings of the two curve families.  The circle
|z| = r* bounds the region where anything interesting can happen.

Writes degree_eight_curves.csv (kind,polyline_id,x,y) next to this script; plot it
with any tool, for instance:

    import pandas as pd, matplotlib.pyplot as plt
    d = pd.read_csv("degree_eight_curves.csv")
    for (kind, pid), g in d.groupby(["kind", "polyline_id"]):
        plt.plot(g.x, g.y, "b-" if kind == "RE" else "r-", lw=0.8)
"""

import math
import pathlib

import numpy as np

from gauss_interleave import aberth_roots, curve_intersections, dominance_radius, find_all_roots, trace

f = np.array([0.1, -0.3, 0.2, -0.1, 0.0, -0.3, -0.1, 0.2, 1.0])
rstar = dominance_radius(f)
print(f"r* = {rstar:.12f}  (sqrt(2) * 1.3 = {math.sqrt(2) * 1.3:.12f})")

cs = trace(f, (-1.5, 1.5, -1.5, 1.5), 800)
print(f"{len(cs.of_kind('RE'))} RE polylines, {len(cs.of_kind('IM'))} IM polylines")
diag = math.hypot(*cs.cell_size)
crossings = curve_intersections(cs, diag)

roots = [r.root for r in find_all_roots(f)]
oracle = aberth_roots(f)
print("\n root (descent)                    nearest crossing   oracle distance")
for z in sorted(roots, key=lambda z: (round(z.real, 6), z.imag)):
    d = min(math.hypot(x - z.real, y - z.imag) for x, y in crossings)
    print(f"  {z.real:+.10f} {z.imag:+.10f}i   {d / diag:6.3f} cells     {np.min(np.abs(oracle - z)):.1e}")

out = pathlib.Path(__file__).with_name("degree_eight_curves.csv")
out.write_text(cs.to_csv())
print(f"\nwrote {out}")
