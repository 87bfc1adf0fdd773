"""Real root isolation on an interval.

Roots of ``p`` on ``(lo, hi)`` are separated by the real roots of ``p'``, so
the critical points found recursively cut the interval into pieces on which
``p`` is monotone.  Each piece holds at most one root, present exactly when
the end values differ in sign; it is then refined by Newton steps kept
inside the bracket, falling back to bisection.  A
critical point where ``p`` vanishes to rounding level is an even-order
(touching) root and is reported once.
"""

from __future__ import annotations

import math

import numpy as np

from .polynomial import as_poly

__all__ = ["real_roots_in"]

_EPS = np.finfo(float).eps
XTOL = 5e-14


def _horner(c, x):
    acc = c[-1]
    for a in c[-2::-1]:
        acc = acc * x + a
    return acc


def _abs_horner(c, x):
    ax = abs(x)
    acc = abs(c[-1])
    for a in c[-2::-1]:
        acc = acc * ax + abs(a)
    return acc


def _split(a: float, b: float) -> float:
    """Bisection point; geometric across wide brackets so huge roots are reached quickly."""
    if b - a <= 4.0 * max(1.0, min(abs(a), abs(b))):
        return 0.5 * (a + b)
    if a >= 1.0:
        return math.sqrt(a * b)
    if b <= -1.0:
        return -math.sqrt(a * b)
    for m in (0.0, 1.0, -1.0):
        if a < m < b:
            return m
    return 0.5 * (a + b)


def _refine(c, a, b, fa, x0=None):
    """Root of ``c`` in the sign-change bracket ``(a, b)``, ``fa = c(a)``."""
    lo_neg = fa < 0
    top = c[-1]
    rest = c[-2::-1]
    x = x0 if x0 is not None and a < x0 < b else _split(a, b)
    for _ in range(400):
        fx, d = top, 0.0
        for coef in rest:
            d = d * x + fx
            fx = fx * x + coef
        if fx == 0.0:
            return x
        if (fx < 0) == lo_neg:
            a = x
        else:
            b = x
        tol = XTOL + 4 * _EPS * max(abs(a), abs(b))
        if b - a <= tol:
            return 0.5 * (a + b)
        xn = x - fx / d if d != 0.0 else a - 1.0
        if abs(xn - x) <= 0.5 * tol and a <= xn <= b:
            return xn
        if not a < xn < b:
            xn = _split(a, b)
        x = xn
    return x


def _isolate(c: list, lo: float, hi: float) -> list:
    n = len(c) - 1
    if n <= 0:
        return []
    if n == 1:
        x = -c[0] / c[1]
        return [x] if lo < x < hi else []
    dc = [k * c[k] for k in range(1, n + 1)]
    crit = _isolate(dc, lo, hi)

    knots = [lo]
    touching = [False]
    for x in crit:
        knots.append(x)
        touching.append(abs(_horner(c, x)) <= 4 * n * _EPS * _abs_horner(c, x))
    knots.append(hi)
    touching.append(False)
    vals = [_horner(c, x) for x in knots]

    roots = []
    for i in range(len(knots) - 1):
        if touching[i]:
            if not roots or roots[-1] != knots[i]:
                roots.append(knots[i])
            continue
        if touching[i + 1]:
            continue
        a, b = knots[i], knots[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0 or fb == 0.0 or (fa < 0) == (fb < 0):
            continue
        roots.append(_refine(c, a, b, fa))
    return roots


def _from_hints(c: list, lo: float, hi: float, hints) -> list | None:
    """Roots from approximate positions, or None if they cannot be certified.

    With ``deg c`` hints, ``c`` must change sign strictly across the
    brackets cut at the midpoints between consecutive hints; that is
    ``deg c`` sign changes, so every root is real, simple and bracketed.
    """
    n = len(c) - 1
    xs = sorted(float(x) for x in hints)
    if len(xs) != n or n == 0 or not lo < xs[0] or not xs[-1] < hi:
        return None
    knots = [lo] + [0.5 * (u + v) for u, v in zip(xs, xs[1:])] + [hi]
    vals = [_horner(c, x) for x in knots]
    for u, v in zip(vals, vals[1:]):
        if u == 0.0 or v == 0.0 or (u < 0) == (v < 0):
            return None
    return [_refine(c, knots[i], knots[i + 1], vals[i], xs[i]) for i in range(n)]


def real_roots_in(p, lo: float, hi: float, hints=None) -> np.ndarray:
    """Sorted real roots of ``p`` strictly inside ``(lo, hi)``.

    Each root is located to about ``5e-14`` absolute.  Multiple roots are
    reported once: odd-order ones through their sign change, even-order
    ones as touching critical points.

    ``hints``, approximate positions of all ``deg p`` roots (say from a
    nearby member of a continuous family), enable a fast path that is taken
    only when a sign check proves the hinted roots are all of them.

    >>> real_roots_in([-1.0, 0.0, 2.0], -1, 1)
    array([-0.70710678,  0.70710678])
    """
    c = as_poly(p)
    if np.iscomplexobj(c):
        raise TypeError("real_roots_in needs real coefficients")
    if len(c) == 1 and c[0] == 0:
        raise ValueError("the zero polynomial has no isolated roots")
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    coeffs = c.tolist()
    roots = None
    if hints is not None:
        roots = _from_hints(coeffs, float(lo), float(hi), hints)
    if roots is None:
        roots = _isolate(coeffs, float(lo), float(hi))
    roots = [x for x in roots if lo < x < hi]
    return np.array(sorted(roots), dtype=float) + 0.0  # no negative zeros
