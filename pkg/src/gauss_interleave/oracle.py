"""Independent reference roots and root-set comparison.

The reference solver is the Aberth-Ehrlich simultaneous iteration, which
shares nothing with the slice-and-descend machinery it is used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polynomial import as_poly

__all__ = ["OracleFailure", "RootMatch", "aberth_roots", "match_root_sets", "residual_spectrum"]


class OracleFailure(RuntimeError):
    pass


def _polyval_and_derivative(c: np.ndarray, z: np.ndarray):
    p = np.full(z.shape, c[-1], dtype=complex)
    dp = np.zeros(z.shape, dtype=complex)
    for a in c[-2::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def aberth_roots(f, tol: float = 1e-10, max_sweeps: int = 200) -> np.ndarray:
    """All ``N`` roots of ``f`` by Aberth-Ehrlich iteration.

    Starting points are spread over the circle of radius
    ``1 + max |c_n / c_N|`` with an angular offset so that no two start on a
    symmetry axis.  Converged when every residual is at most
    ``tol * sum_n |c_n| |z|**n``; two more sweeps polish the result.

    Raises
    ------
    OracleFailure
        If the residual test is not met within ``max_sweeps`` sweeps.
    """
    c = as_poly(f).astype(complex)
    n = len(c) - 1
    if n < 1:
        raise ValueError("nonconstant polynomial required")
    c = c / c[-1]
    if n == 1:
        return np.array([-c[0]])
    radius = 1.0 + float(np.max(np.abs(c[:-1])))
    k = np.arange(n)
    z = radius * np.exp(1j * (2 * np.pi * k / n + 0.4))
    absc = np.abs(c)
    extra = 2
    for _ in range(max_sweeps):
        p, dp = _polyval_and_derivative(c, z)
        scale = np.polynomial.polynomial.polyval(np.abs(z), absc)
        if np.all(np.abs(p) <= tol * scale):
            if extra == 0:
                return z
            extra -= 1
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = p / dp
            corr = w / (1.0 - w * s)
        # exact hits give p == 0; leave those points alone
        corr = np.where(p == 0, 0.0, corr)
        if not np.all(np.isfinite(corr)):
            raise OracleFailure("Aberth iteration produced non-finite corrections")
        z = z - corr
    raise OracleFailure(f"Aberth iteration did not converge in {max_sweeps} sweeps")


@dataclass(frozen=True)
class RootMatch:
    pairing: list[tuple[int, int]]
    max_distance: float
    matched: bool

    def to_dict(self) -> dict:
        return {
            "matched": self.matched,
            "max_distance": self.max_distance,
            "pairing": [list(p) for p in self.pairing],
        }


def match_root_sets(a, b, tol: float) -> RootMatch:
    """Pair two root lists greedily by distance, then improve by pairwise swaps.

    A swap of two partners is taken whenever it lowers the larger of the two
    distances involved.
    """
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        raise ValueError(f"root lists differ in size: {a.size} vs {b.size}")
    if a.size == 0:
        return RootMatch([], 0.0, True)
    d = np.abs(a[:, None] - b[None, :])
    partner = np.full(a.size, -1)
    free_a = np.ones(a.size, bool)
    free_b = np.ones(b.size, bool)
    order = np.argsort(d, axis=None, kind="stable")
    for flat in order:
        i, j = divmod(int(flat), b.size)
        if free_a[i] and free_b[j]:
            partner[i] = j
            free_a[i] = free_b[j] = False
    improved = True
    while improved:
        improved = False
        for i in range(a.size):
            for k in range(i + 1, a.size):
                j, l = partner[i], partner[k]
                if max(d[i, l], d[k, j]) < max(d[i, j], d[k, l]):
                    partner[i], partner[k] = l, j
                    improved = True
    pairing = [(i, int(partner[i])) for i in range(a.size)]
    worst = float(max(d[i, j] for i, j in pairing))
    return RootMatch(pairing, worst, worst <= tol)


def residual_spectrum(f, roots) -> list[float]:
    """``|f(z)|`` for each root."""
    c = as_poly(f)
    z = np.asarray(roots, dtype=complex)
    return [float(abs(v)) for v in np.polynomial.polynomial.polyval(z, c)]


def min_separation(roots) -> float:
    """Smallest distance between two roots in the list (inf for fewer than two)."""
    z = np.asarray(roots, dtype=complex)
    if z.size < 2:
        return math.inf
    d = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(d, np.inf)
    return float(d.min())
