"""Locate roots by descending through slices until two zero curves collide.

Start from a slice parameter where the zeros of Re f and Im f interleave
(a large circle, or a high horizontal line).  Step the parameter down until
interleaving breaks, bisect the transition, and read the root off the
alpha/beta pair that is about to coincide.  Every candidate is polished by
Newton's method and accepted only on its residual.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .circle import CircleSection, circle_zeros, dominance_radius
from .line import LineSection, degenerate_height, interleaving_height, line_zeros
from .polynomial import (
    as_poly,
    coefficient_scale,
    deflate,
    is_real,
    monicize,
    realify,
    strip_zero_roots,
)

__all__ = [
    "GAP_TOL",
    "S_TOL",
    "RES_TOL",
    "RHO",
    "SearchFailure",
    "RootReport",
    "CircleFamily",
    "LineFamily",
    "make_family",
    "boundaries",
    "bracket_boundary",
    "bisect_boundary",
    "collision_candidates",
    "newton_refine",
    "find_one_root",
    "find_all_roots",
]

log = logging.getLogger(__name__)

GAP_TOL = 1e-7
S_TOL = 1e-9
RES_TOL = 1e-10
RHO = 0.9

Section = Union[CircleSection, LineSection]


class SearchFailure(RuntimeError):
    """The descent did not produce an acceptable root."""

    def __init__(self, message: str, **diagnostics):
        self.diagnostics = diagnostics
        super().__init__(message)


@dataclass(frozen=True)
class RootReport:
    root: complex
    residual: float
    method: str
    polish_iterations: int = 0
    bracket: tuple[float, float] | None = None

    def to_dict(self) -> dict:
        return {
            "re": self.root.real,
            "im": self.root.imag,
            "residual": self.residual,
            "method": self.method,
            "iterations": self.polish_iterations,
            "bracket": list(self.bracket) if self.bracket is not None else None,
        }


def _good(section: Section, gap_tol: float) -> bool:
    return section.interleaving and section.min_gap >= gap_tol


class CircleFamily:
    """Circles ``|z| = r`` for a monic real ``f`` with ``f(0) != 0``."""

    name = "circle"

    def __init__(self, f):
        f = monicize(f)
        if not is_real(f):
            raise ValueError("the circle family needs real coefficients")
        f = np.real(f).astype(float)
        if f[0] == 0:
            raise ValueError("f(0) = 0: strip zero roots first")
        self.f = f
        self.rstar = dominance_radius(f)
        self.start = 1.05 * self.rstar
        # no root has modulus below |c0| / (|c0| + max |c_n|)
        c0 = abs(f[0])
        self.floor = 0.5 * c0 / (c0 + float(np.max(np.abs(f[1:]))))

    def section(self, s: float, near: CircleSection | None = None) -> CircleSection:
        return circle_zeros(self.f, s, near)

    def step_down(self, s: float) -> float:
        return s * RHO

    def step_up(self, s: float) -> float:
        return 2.0 * s

    def exhausted(self, s: float) -> bool:
        return s < self.floor

    def point(self, s: float, angle: float) -> complex:
        return s * cmath.exp(1j * angle)

    def pairs(self, sec: CircleSection) -> list[tuple[float, float]]:
        """``(gap, alpha)`` for each alpha and its cyclically nearest beta."""
        b = sec.betas
        out = []
        for a in sec.alphas:
            d = np.abs(a - b)
            d = np.minimum(d, 2 * math.pi - d)
            out.append((float(d.min()), float(a)))
        return out


class LineFamily:
    """Horizontal lines ``Im z = y`` for a monic ``f`` of degree >= 2."""

    name = "line"

    def __init__(self, f, n_steps: int = 64):
        f = monicize(f)
        if len(f) < 3:
            raise ValueError("the line family needs degree >= 2")
        self.f = f
        self.start = interleaving_height(f)
        self.floor = degenerate_height(f)
        self.step = (self.start - self.floor) / n_steps
        self.lowest = self.floor - 2 * dominance_radius(f)

    def section(self, s: float, near: LineSection | None = None) -> LineSection:
        return line_zeros(self.f, s, near)

    def step_down(self, s: float) -> float:
        nxt = s - self.step
        # the degenerate height is never interleaving: always land on it
        if s > self.floor > nxt:
            return self.floor
        return nxt

    def step_up(self, s: float) -> float:
        return s + (self.start - self.floor)

    def exhausted(self, s: float) -> bool:
        return s < self.lowest

    def point(self, s: float, x: float) -> complex:
        return complex(x, s)

    def pairs(self, sec: LineSection) -> list[tuple[float, float]]:
        if sec.betas.size == 0:
            return []
        return [(float(np.min(np.abs(a - sec.betas))), float(a)) for a in sec.alphas]


def make_family(f, method: str):
    if method == "circle":
        return CircleFamily(f)
    if method == "line":
        return LineFamily(f)
    raise ValueError(f"unknown method {method!r}")


def boundaries(family, gap_tol: float = GAP_TOL) -> Iterator[tuple[float, float]]:
    """Yield successive ``(s_bad, s_good)`` brackets while descending.

    Each bracket has an acceptable (interleaving, well separated) section at
    ``s_good`` and an unacceptable one at ``s_bad``.  After a bracket the
    descent keeps going, skipping the bad stretch, to find the next one.
    """
    s = family.start
    for _ in range(16):
        prev = family.section(s)
        if _good(prev, gap_tol):
            break
        log.debug("%s family: start %.6g not interleaving, moving up", family.name, s)
        s = family.step_up(s)
    else:
        raise SearchFailure(
            "no interleaving starting slice found", family=family.name, start=s
        )
    good = True
    while True:
        nxt = family.step_down(s)
        if family.exhausted(nxt):
            if good:
                raise SearchFailure(
                    "reached the floor while still interleaving "
                    "(is f(0) = 0 unstripped?)",
                    family=family.name,
                    floor=family.floor,
                    last=s,
                )
            return
        sec = family.section(nxt, prev)
        now_good = _good(sec, gap_tol)
        if good and not now_good:
            yield nxt, s
        good = now_good
        prev = sec
        s = nxt


def bracket_boundary(family, gap_tol: float = GAP_TOL) -> tuple[float, float]:
    """First ``(s_bad, s_good)`` bracket met while descending from the start."""
    return next(boundaries(family, gap_tol))


def _bisect(family, s_bad, s_good, s_tol, gap_tol) -> tuple[float, float]:
    if not s_tol > 0:
        raise ValueError("s_tol must be positive")
    lo, hi = float(s_bad), float(s_good)
    near = None
    while abs(hi - lo) > s_tol:
        mid = 0.5 * (lo + hi)
        if not (min(lo, hi) < mid < max(lo, hi)):
            break
        sec = family.section(mid, near)
        if _good(sec, gap_tol):
            hi, near = mid, sec
        else:
            lo = mid
    return lo, hi


def bisect_boundary(
    family, s_bad: float, s_good: float, s_tol: float = S_TOL, gap_tol: float = GAP_TOL
) -> float:
    """Shrink the bracket to width ``s_tol``; return its good endpoint."""
    return _bisect(family, s_bad, s_good, s_tol, gap_tol)[1]


def collision_candidates(
    family, s: float, gap_tol: float = GAP_TOL, s_bad: float | None = None
) -> list[complex]:
    """Points where an alpha zero and a beta zero are about to meet at ``s``.

    Emits every alpha whose nearest beta lies within ``10 * gap_tol`` of the
    smallest such distance.  On the line family, if the bad side of the
    bracket has ``I_y`` identically zero, all real roots of ``R_y`` there
    are roots of ``f`` and are emitted as well.
    """
    sec = family.section(s)
    pairs = family.pairs(sec)
    out = []
    if pairs:
        smallest = min(g for g, _ in pairs)
        out = [family.point(s, a) for g, a in pairs if g <= smallest + 10 * gap_tol]
    if s_bad is not None and family.name == "line":
        bad = family.section(s_bad)
        if bad.im_zero:
            out.extend(family.point(s_bad, a) for a in bad.alphas)
    return out


def _horner2(c: list, z: complex) -> tuple[complex, complex]:
    p = c[-1]
    dp = 0.0
    for a in c[-2::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def newton_refine(f, z0, res_tol: float = RES_TOL, max_iter: int = 100) -> RootReport:
    """Damped Newton iteration; returns the best-residual iterate.

    Stops once ``|f(z)| <= res_tol * coefficient_scale(f, z)`` (after two
    extra polishing steps), when the step falls below ``1e-15 * max(1, |z|)``,
    or after ``max_iter`` iterations.
    """
    c = as_poly(f).tolist()
    absc = float(np.sum(np.abs(as_poly(f))))
    n = len(c) - 1
    z = complex(z0) if isinstance(z0, complex) or np.iscomplexobj(z0) else float(z0)
    p, dp = _horner2(c, z)
    best, best_res, it = z, abs(p), 0
    extra = 2
    while it < max_iter:
        if best_res <= res_tol * absc * max(1.0, abs(z)) ** n:
            if extra == 0:
                break
            extra -= 1
        if dp == 0:
            break
        step = p / dp
        t = 1.0
        for _ in range(30):
            zn = z - t * step
            pn, dpn = _horner2(c, zn)
            if abs(pn) < abs(p):
                break
            t *= 0.5
        else:
            break
        it += 1
        moved = abs(zn - z)
        z, p, dp = zn, pn, dpn
        if abs(p) < best_res:
            best, best_res = z, abs(p)
        if moved <= 1e-15 * max(1.0, abs(z)):
            break
    return RootReport(root=complex(best), residual=best_res, method="newton", polish_iterations=it)


def _accept(f, report: RootReport, res_tol: float) -> bool:
    return report.residual <= res_tol * coefficient_scale(f, report.root)


def find_one_root(
    f,
    method: str = "circle",
    *,
    gap_tol: float = GAP_TOL,
    s_tol: float = S_TOL,
    res_tol: float = RES_TOL,
    max_boundaries: int = 8,
) -> RootReport:
    """Find one root of ``f`` (``f(0) != 0``) by the circle or line descent.

    The circle method works on real coefficients; complex ``f`` is replaced
    by ``f * conj(f)`` and both the located point and its conjugate are
    tried against ``f``.
    """
    f = as_poly(f)
    if len(f) < 2:
        raise ValueError("nonconstant polynomial required")
    if f[0] == 0:
        raise ValueError("f(0) = 0: strip zero roots first")
    f = monicize(f)
    if len(f) == 2:
        root = complex(-f[0])
        return RootReport(root, abs(complex(f[0]) + root), method, 0, None)

    realified = method == "circle" and not is_real(f)
    family = make_family(realify(f) if realified else f, method)
    tried = []
    for k, (s_bad, s_good) in enumerate(boundaries(family, gap_tol)):
        if k >= max_boundaries:
            break
        lo, hi = _bisect(family, s_bad, s_good, s_tol, gap_tol)
        cands = collision_candidates(family, hi, gap_tol, s_bad=lo)
        if realified:
            cands = cands + [z.conjugate() for z in cands]
        reports = [(newton_refine(f, z, res_tol), z) for z in cands]
        tried.append({"bracket": (lo, hi), "candidates": cands})
        # of the accepted polishes, keep the one that moved least, so the
        # root belongs to this collision rather than one Newton wandered to
        accepted = [(abs(r.root - z), r) for r, z in reports if _accept(f, r, res_tol)]
        log.debug(
            "%s boundary [%.12g, %.12g]: %d candidates, %d accepted",
            method, lo, hi, len(cands), len(accepted),
        )
        if accepted:
            best = min(accepted, key=lambda t: (t[0], t[1].residual))[1]
            return RootReport(best.root, best.residual, method, best.polish_iterations, (lo, hi))
    raise SearchFailure(
        f"{method} descent found no acceptable root", method=method, tried=tried
    )


def _real_root(F, z: complex, res_tol: float) -> complex | None:
    """Return a real root of real ``F`` near ``z`` if Newton on the real line finds one."""
    rep = newton_refine(F, float(z.real), res_tol)
    if _accept(F, rep, res_tol) and abs(rep.root - z) <= 1e-4 * max(1.0, abs(z)):
        return complex(rep.root.real, 0.0)
    return None


def find_all_roots(
    f,
    method: str = "circle",
    *,
    gap_tol: float = GAP_TOL,
    s_tol: float = S_TOL,
    res_tol: float = RES_TOL,
) -> list[RootReport]:
    """All ``deg f`` roots: strip zero roots, then find, polish and deflate in turn.

    Roots are polished against the original polynomial before each
    deflation.  For real input, complex roots come out in conjugate pairs
    and the working polynomial stays real.
    """
    f0 = as_poly(f)
    n = len(f0) - 1
    if n < 1:
        raise ValueError("nonconstant polynomial required")
    F = monicize(f0)
    real_input = is_real(F)
    if real_input:
        F = np.real(F).astype(float)

    def report(z: complex, rep: RootReport) -> RootReport:
        return RootReport(
            complex(z), abs(complex(np.polynomial.polynomial.polyval(z, f0))),
            rep.method, rep.polish_iterations, rep.bracket,
        )

    m, h = strip_zero_roots(F)
    out = [RootReport(0j, 0.0, "strip", 0, None) for _ in range(m)]
    stage = 0
    while len(h) > 1:
        if h[0] == 0:
            # deflation left an exact zero constant term
            m2, h = strip_zero_roots(h)
            out.extend(report(0j, RootReport(0j, 0.0, "strip")) for _ in range(m2))
            continue
        stage += 1
        try:
            rep = find_one_root(h, method, gap_tol=gap_tol, s_tol=s_tol, res_tol=res_tol)
        except SearchFailure as exc:
            exc.diagnostics["stage"] = stage
            exc.diagnostics["degree"] = len(h) - 1
            raise
        z = rep.root
        pol = newton_refine(F, z, res_tol)
        if abs(pol.root - z) <= 1e-6 * max(1.0, abs(z)) and pol.residual <= abs(
            complex(np.polynomial.polynomial.polyval(z, F))
        ):
            z = pol.root
        if real_input:
            zr = None
            if abs(z.imag) <= 1e-6 * max(1.0, abs(z)) or len(h) == 2:
                zr = _real_root(F, z, res_tol)
                if zr is None and len(h) == 2:
                    zr = complex(-h[0], 0.0)
            if zr is not None:
                out.append(report(zr, rep))
                h = deflate(h, zr.real)[0]
                continue
            out.append(report(z, rep))
            out.append(report(z.conjugate(), rep))
            h = np.real(deflate(deflate(h, z)[0], z.conjugate())[0]).astype(float)
            h[-1] = 1.0
            continue
        out.append(report(z, rep))
        h = deflate(h, z)[0]
        h[-1] = 1.0
    return out
