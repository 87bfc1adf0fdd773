"""
Sweeping horizontal lines down onto a root
==========================================

On the line Im z = y, f(x + iy) = R_y(x) + i I_y(x) with R_y monic of degree
N and I_y of degree N - 1.  High lines interleave N real roots of R_y with
N - 1 real roots of I_y.  There is one height where I_y loses its top
coefficient; it never interleaves, so the sweep always meets a boundary.
"""

import numpy as np

from gauss_interleave import aberth_roots, degenerate_height, find_all_roots, line_zeros
from gauss_interleave.line import interleaving_height

f = np.array([0.3 - 0.2j, -0.5j, 0.4 + 0.1j, 1.0])
print("degenerate height :", degenerate_height(f))
print("starting height   :", interleaving_height(f))

for y in np.linspace(interleaving_height(f), degenerate_height(f), 7):
    s = line_zeros(f, y)
    print(f"y = {y:+.4f}  alphas {np.round(s.alphas, 3)}  betas {np.round(s.betas, 3)}"
          f"  interleaving={s.interleaving}")

# %%
# Each found root is polished and divided out before the next sweep.

for rep in find_all_roots(f, "line"):
    print(f"root {rep.root:.12f}  |f| = {rep.residual:.1e}  bracket {rep.bracket}")
print("oracle:", np.round(np.sort_complex(aberth_roots(f)), 12))
