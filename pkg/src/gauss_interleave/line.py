"""Zeros of Re f and Im f on the horizontal line Im z = y.

For monic ``f`` of degree ``N`` with complex coefficients, ``f(x + iy)``
expands in powers of ``x`` as ``R_y(x) + i I_y(x)`` where ``R_y`` is monic of
degree ``N`` and the ``x**(N-1)`` coefficient of ``I_y`` is ``N*y + a`` with
``a = Im c_{N-1}``.  A height is interleaving when ``R_y`` has ``N`` real
roots, ``I_y`` has ``N - 1``, and they alternate starting with a root of
``R_y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circle import CLUSTER_TOL, dominance_radius
from .isolation import real_roots_in
from .polynomial import as_poly, require_monic

__all__ = [
    "LineSection",
    "taylor_shift",
    "line_polys",
    "degenerate_height",
    "interleaving_height",
    "line_zeros",
    "is_interleaving_line",
    "cauchy_bound",
]

_EPS = np.finfo(float).eps
ZERO_IM_TOL = 1e-14


def taylor_shift(c, s: complex) -> np.ndarray:
    """Coefficients of ``f(x + s)`` as a polynomial in ``x``."""
    b = as_poly(c).astype(np.complex128)
    n = len(b) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            b[j] += s * b[j + 1]
    return b


def line_polys(f, y: float) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(R_y, I_y)`` as real polynomials in ``x``.

    ``I_y`` may come back as the zero polynomial ``[0.0]``.  Its
    ``x**(N-1)`` coefficient is set from ``N*y + Im c_{N-1}`` directly and
    snapped to zero when that value is at rounding level.
    """
    f = require_monic(f)
    n = len(f) - 1
    if n < 2:
        raise ValueError("line slices need degree >= 2")
    b = taylor_shift(f, 1j * float(y))
    R = b.real.copy()
    I = b.imag.copy()
    R[n] = 1.0
    I[n] = 0.0
    a = float(np.imag(f[n - 1]))
    lead = n * float(y) + a
    if abs(lead) <= 4 * _EPS * (abs(n * float(y)) + abs(a)):
        lead = 0.0
    I[n - 1] = lead
    return as_poly(R), as_poly(I)


def degenerate_height(f) -> float:
    """The height ``-Im(c_{N-1}) / N`` where ``I_y`` drops below degree ``N - 1``."""
    f = require_monic(f)
    n = len(f) - 1
    if n < 2:
        raise ValueError("line slices need degree >= 2")
    return -float(np.imag(f[n - 1])) / n


def interleaving_height(f) -> float:
    """Starting height ``max(1, sqrt(2) sum |c_n|) + |degenerate height|``."""
    return dominance_radius(f) + abs(degenerate_height(f))


def cauchy_bound(c) -> float:
    """Every root of ``c`` lies in ``|x| < 1 + max |c_k / c_N|``."""
    c = as_poly(c)
    if len(c) < 2:
        return 1.0
    return 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))


@dataclass(frozen=True)
class LineSection:
    """The zero structure of Re f and Im f on one horizontal line."""

    y: float
    n: int
    R: np.ndarray
    I: np.ndarray
    alphas: np.ndarray
    betas: np.ndarray
    interleaving: bool
    degenerate: bool
    min_gap: float
    im_zero: bool = False
    clustered: bool = False

    def to_dict(self) -> dict:
        return {
            "family": "line",
            "y": self.y,
            "N": self.n,
            "alphas": self.alphas.tolist(),
            "betas": self.betas.tolist(),
            "interleaving": self.interleaving,
            "degenerate": self.degenerate,
            "min_gap": self.min_gap,
            "R": self.R.tolist(),
            "I": self.I.tolist(),
        }


def is_interleaving_line(section: LineSection) -> bool:
    """True iff ``a1 < b1 < a2 < ... < b_{N-1} < a_N`` with full counts."""
    n = section.n
    a, b = np.asarray(section.alphas), np.asarray(section.betas)
    if section.degenerate or section.clustered:
        return False
    if a.size != n or b.size != n - 1:
        return False
    return bool(np.all(a[:-1] < b) and np.all(b < a[1:]))


def _roots(c: np.ndarray, hints=None) -> np.ndarray:
    if len(c) < 2:
        return np.zeros(0)
    bound = cauchy_bound(c)
    return real_roots_in(c, -bound, bound, hints)


def _min_gap(a: np.ndarray, b: np.ndarray) -> float:
    if a.size == 0 or b.size == 0:
        return math.inf
    return float(np.min(np.abs(a[:, None] - b[None, :])))


def line_zeros(f, y: float, near: LineSection | None = None) -> LineSection:
    """Compute the line section of monic ``f`` at height ``y``.

    ``near``, an interleaving section at a nearby height, seeds the root
    isolation; the result does not depend on it.
    """
    f = require_monic(f)
    n = len(f) - 1
    R, I = line_polys(f, y)
    scale = float(np.sum(np.abs(R))) + float(np.sum(np.abs(I)))
    im_zero = bool(np.all(np.abs(I) <= ZERO_IM_TOL * scale))
    hint = near if near is not None and near.interleaving and near.n == n else None
    alphas = _roots(R, hint.alphas if hint else None)
    betas = np.zeros(0) if im_zero else _roots(I, hint.betas if hint else None)
    degenerate = im_zero or len(I) - 1 < n - 1

    clustered = any(
        v.size > 1 and float(np.min(np.diff(v))) <= CLUSTER_TOL for v in (alphas, betas)
    )
    gap = _min_gap(alphas, betas)
    if gap <= CLUSTER_TOL:
        clustered = True
    if clustered:
        gap = 0.0
    section = LineSection(
        y=float(y),
        n=n,
        R=R,
        I=I,
        alphas=alphas,
        betas=betas,
        interleaving=False,
        degenerate=degenerate,
        min_gap=gap,
        im_zero=im_zero,
        clustered=clustered,
    )
    verdict = is_interleaving_line(section)
    return LineSection(**{**section.__dict__, "interleaving": verdict})
