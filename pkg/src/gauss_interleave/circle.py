"""Zeros of Re f and Im f on the circle |z| = r.

For a real polynomial ``f`` of degree ``N`` and a radius ``r``,

    Re f(r e^{it}) = p_r(cos t),     Im f(r e^{it}) = sin t * q_r(cos t),

with ``deg p_r <= N`` and ``deg q_r <= N - 1``.  Both follow from
``Re e^{int} = T_n(cos t)`` and ``Im e^{int} = sin t * U_{n-1}(cos t)``.
A radius is *interleaving* when Re f and Im f each vanish at ``2N`` angles
and the two zero sets strictly alternate around the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .isolation import real_roots_in
from .polynomial import as_poly, is_real, require_monic

__all__ = [
    "CircleSection",
    "dominance_radius",
    "circle_polys",
    "circle_zeros",
    "is_interleaving",
    "check_sign_pattern",
    "cyclic_min_gap",
    "real_roots_in",
    "CLUSTER_TOL",
]

TWO_PI = 2.0 * math.pi
CLUSTER_TOL = 1e-10
_EPS = np.finfo(float).eps


def dominance_radius(f) -> float:
    """``max(1, sqrt(2) * sum |c_n|)`` over the non-leading coefficients of monic ``f``.

    Beyond this radius the leading term fixes the signs of Re f and Im f on
    the sign grid used by :func:`check_sign_pattern`, so every larger
    radius is interleaving.
    """
    f = require_monic(f)
    return max(1.0, math.sqrt(2.0) * math.fsum(np.abs(f[:-1]).tolist()))


@lru_cache(maxsize=128)
def _chebyshev_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Power-basis coefficients of T_0..T_n and U_{-1}..U_{n-1} (rows)."""
    T = np.zeros((n + 1, n + 1))
    U = np.zeros((n + 1, n + 1))  # U[k] holds U_{k-1}; U_{-1} = 0
    T[0, 0] = 1.0
    if n >= 1:
        T[1, 1] = 1.0
        U[1, 0] = 1.0
    for k in range(2, n + 1):
        T[k, 1:] = 2.0 * T[k - 1, :-1]
        T[k] -= T[k - 2]
        U[k, 1:] = 2.0 * U[k - 1, :-1]
        U[k] -= U[k - 2]
    T.flags.writeable = False
    U.flags.writeable = False
    return T, U


def _scaled_coeffs(f: np.ndarray, r: float) -> tuple[np.ndarray, float]:
    """Coefficients of ``f(r w) / s`` and the factor ``s`` (``r**N`` when r > 1)."""
    k = np.arange(len(f), dtype=float)
    if r > 1.0:
        n = len(f) - 1
        with np.errstate(over="ignore"):
            s = r**n
        return f * r ** (k - n), s
    return f * r**k, 1.0


def _cheb_to_power(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = len(a) - 1
    T, U = _chebyshev_tables(n)
    p = a @ T
    q = (a @ U)[:-1] if n >= 1 else np.zeros(1)
    return as_poly(p), as_poly(q)


def _unscale(c: np.ndarray, s: float) -> np.ndarray:
    with np.errstate(over="ignore"):
        out = c * s
    if not np.all(np.isfinite(out)):
        raise OverflowError("r**N overflows double precision for this radius and degree")
    return as_poly(out)


def circle_polys(f, r: float) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(p_r, q_r)`` for a real polynomial ``f``."""
    f = as_poly(f)
    if not is_real(f):
        raise ValueError("circle_polys needs real coefficients (realify first)")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    a, s = _scaled_coeffs(np.real(f).astype(float), float(r))
    p, q = _cheb_to_power(a)
    return _unscale(p, s), _unscale(q, s)


def cyclic_min_gap(alphas, betas, period: float = TWO_PI) -> float:
    """Smallest cyclic distance between any alpha and any beta (inf if one set is empty)."""
    a = np.asarray(alphas, dtype=float)
    b = np.sort(np.asarray(betas, dtype=float))
    if a.size == 0 or b.size == 0:
        return math.inf
    idx = np.searchsorted(b, a)
    right = b[idx % b.size] + np.where(idx == b.size, period, 0.0)
    left = b[idx - 1] - np.where(idx == 0, period, 0.0)
    d = np.minimum(np.abs(right - a), np.abs(a - left))
    return float(d.min())


def _has_cluster(angles: np.ndarray, period: float = TWO_PI) -> bool:
    if angles.size < 2:
        return False
    d = np.diff(angles)
    wrap = angles[0] + period - angles[-1]
    return bool(d.min() <= CLUSTER_TOL or wrap <= CLUSTER_TOL)


@dataclass(frozen=True)
class CircleSection:
    """The zero structure of Re f and Im f on one circle."""

    r: float
    n: int
    p: np.ndarray
    q: np.ndarray
    alphas: np.ndarray
    betas: np.ndarray
    interleaving: bool
    min_gap: float
    clustered: bool = False

    def to_dict(self) -> dict:
        return {
            "family": "circle",
            "r": self.r,
            "N": self.n,
            "alphas": self.alphas.tolist(),
            "betas": self.betas.tolist(),
            "interleaving": self.interleaving,
            "min_gap": self.min_gap,
            "p": self.p.tolist(),
            "q": self.q.tolist(),
        }


def is_interleaving(section: CircleSection) -> bool:
    """True iff there are 2N zeros of each kind alternating ``0 = b1 < a1 < b2 < ...``."""
    n2 = 2 * section.n
    a, b = np.asarray(section.alphas), np.asarray(section.betas)
    if section.clustered or a.size != n2 or b.size != n2:
        return False
    if b[0] != 0.0:
        return False
    # strict alternation: b[k] < a[k] < b[k+1], last alpha below 2*pi
    nxt = np.append(b[1:], TWO_PI)
    return bool(np.all(b < a) and np.all(a < nxt))


def _endpoint_zero(c: np.ndarray, x: float) -> bool:
    val = float(np.polynomial.polynomial.polyval(x, c))
    return abs(val) <= 4 * len(c) * _EPS * float(np.sum(np.abs(c)))


def _angles(roots: np.ndarray) -> np.ndarray:
    t = np.arccos(np.clip(roots, -1.0, 1.0))
    return np.concatenate([t, TWO_PI - t])


def _cos_hints(angles: np.ndarray) -> np.ndarray:
    inner = angles[(angles > 0.0) & (angles < math.pi)]
    return np.cos(inner)


def circle_zeros(f, r: float, near: CircleSection | None = None) -> CircleSection:
    """Compute the circle section of monic real ``f`` at radius ``r``.

    ``near``, a section at a nearby radius, seeds the root isolation; the
    result does not depend on it.
    """
    f = require_monic(f)
    if not is_real(f):
        raise ValueError("circle_zeros needs real coefficients (realify first)")
    f = np.real(f).astype(float)
    if f[0] == 0:
        raise ValueError("f(0) = 0: strip zero roots first")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    n = len(f) - 1
    a, s = _scaled_coeffs(f, float(r))
    ps, qs = _cheb_to_power(a)

    a_hint = b_hint = None
    if near is not None and near.interleaving and near.n == n:
        a_hint, b_hint = _cos_hints(near.alphas), _cos_hints(near.betas)
    alphas = list(_angles(real_roots_in(ps, -1.0, 1.0, a_hint)))
    if _endpoint_zero(ps, 1.0):
        alphas.append(0.0)
    if _endpoint_zero(ps, -1.0):
        alphas.append(math.pi)
    betas = [0.0, math.pi]
    if len(qs) > 1 or qs[0] != 0:
        betas.extend(_angles(real_roots_in(qs, -1.0, 1.0, b_hint)))
    alphas = np.sort(np.array(alphas, dtype=float))
    betas = np.sort(np.array(betas, dtype=float))

    clustered = _has_cluster(alphas) or _has_cluster(betas)
    gap = cyclic_min_gap(alphas, betas)
    if gap <= CLUSTER_TOL:
        clustered = True
    if clustered:
        gap = 0.0
    section = CircleSection(
        r=float(r),
        n=n,
        p=_unscale(ps, s),
        q=_unscale(qs, s),
        alphas=alphas,
        betas=betas,
        interleaving=False,
        min_gap=gap,
        clustered=clustered,
    )
    verdict = is_interleaving(section)
    return CircleSection(**{**section.__dict__, "interleaving": verdict})


def sign_grid(n: int) -> np.ndarray:
    """The angles ``(2k - 1) pi / (4N)`` for ``k = 0 .. 4N``."""
    k = np.arange(4 * n + 1)
    return (2 * k - 1) * math.pi / (4 * n)


def check_sign_pattern(f, r: float) -> bool:
    """Check the leading-term sign pattern of Re f and Im f on the sign grid.

    At ``z_k = r e^{i t_k}`` the term ``z_k**N`` has argument ``(2k-1) pi / 4``;
    for ``r`` above :func:`dominance_radius` the lower-order terms are too
    small to flip the sign of either component.  Works for complex ``f``.
    """
    f = require_monic(f)
    rstar = dominance_radius(f)
    if not r > rstar:
        raise ValueError(f"radius {r} does not exceed the dominance radius {rstar}")
    n = len(f) - 1
    theta = sign_grid(n)
    a, _ = _scaled_coeffs(f, float(r))
    vals = np.polynomial.polynomial.polyval(np.exp(1j * theta), a.astype(complex))
    lead = (2 * np.arange(4 * n + 1) - 1) * math.pi / 4
    re_ok = np.sign(vals.real) == np.sign(np.round(np.cos(lead), 12))
    im_ok = np.sign(vals.imag) == np.sign(np.round(np.sin(lead), 12))
    return bool(np.all(re_ok) and np.all(im_ok))
