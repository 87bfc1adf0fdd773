"""Acceptance criteria 1-9.

Each test records one ``ACCEPTANCE <n> PASS|FAIL ...`` line; the lines are
printed in the pytest terminal summary and, when this file is run directly,
on stdout.
"""

import io
import json
import math
import time

import numpy as np
import pytest

from gauss_interleave import cli
from gauss_interleave.circle import check_sign_pattern, circle_polys, circle_zeros, dominance_radius
from gauss_interleave.curves import curve_intersections, trace
from gauss_interleave.descent import (
    bisect_boundary,
    bracket_boundary,
    collision_candidates,
    find_all_roots,
    make_family,
    newton_refine,
)
from gauss_interleave.line import degenerate_height, line_polys, line_zeros
from gauss_interleave.oracle import aberth_roots, match_root_sets, min_separation
from gauss_interleave.polynomial import coefficient_scale, evaluate, write_poly
from gauss_interleave.sampling import random_monic, random_suite

from conftest import FIG1, Z2P1

RESULTS: dict[int, str] = {}

SUITE_SEED = 1
REAL_SEED = 2
TIME_BUDGET = 120.0


def record(n: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def complex_suite():
    polys = random_suite(SUITE_SEED, 200, (2, 10))
    t0 = time.perf_counter()
    circle = [[r.root for r in find_all_roots(f, "circle")] for f in polys]
    elapsed = time.perf_counter() - t0
    oracle = [aberth_roots(f) for f in polys]
    return polys, circle, oracle, elapsed


def test_criterion_1_random_suite(complex_suite):
    polys, found, oracle, elapsed = complex_suite
    failures = []
    worst_res = 0.0
    for k, (f, roots, ref) in enumerate(zip(polys, found, oracle)):
        n = len(f) - 1
        res = max(abs(evaluate(f, z)) / coefficient_scale(f, z) for z in roots)
        worst_res = max(worst_res, res)
        ok = len(roots) == n and res <= 1e-8 and match_root_sets(roots, ref, 1e-6).matched
        if not ok:
            failures.append(k)
    excused = [k for k in failures if min_separation(oracle[k]) < 1e-4]
    ok = len(failures) <= 2 and excused == failures and elapsed <= TIME_BUDGET
    record(
        1, ok,
        f"{200 - len(failures)}/200 matched at 1e-6, worst scaled residual {worst_res:.2e}, "
        f"{len(excused)} ill-conditioned exclusions, find_all_roots time {elapsed:.1f}s (budget {TIME_BUDGET:.0f}s)",
    )


def test_criterion_2_real_suite():
    polys = random_suite(REAL_SEED, 100, (2, 10), real=True)
    conj_worst = match_worst = 0.0
    bad = 0
    for f in polys:
        roots = np.array([r.root for r in find_all_roots(f, "circle")])
        conj = match_root_sets(roots, roots.conj(), 1e-8)
        orc = match_root_sets(roots, aberth_roots(f), 1e-6)
        conj_worst = max(conj_worst, conj.max_distance)
        match_worst = max(match_worst, orc.max_distance)
        bad += not (conj.matched and orc.matched)
    record(
        2, bad == 0,
        f"{100 - bad}/100 closed under conjugation (worst {conj_worst:.1e}) "
        f"and oracle-matched (worst {match_worst:.1e})",
    )


def test_criterion_3_degree_eight_reference():
    rstar = dominance_radius(FIG1)
    r_ok = abs(rstar - math.sqrt(2) * 1.3) <= 1e-12
    radii = np.linspace(rstar, 3.0, 21)[1:]
    inter = sum(circle_zeros(FIG1, r).interleaving for r in radii)
    cs = trace(FIG1, (-1.5, 1.5, -1.5, 1.5), 800)
    diag = math.hypot(*cs.cell_size)
    pts = np.array(curve_intersections(cs, diag))
    ref = aberth_roots(FIG1)
    dist = [float(np.min(np.hypot(pts[:, 0] - z.real, pts[:, 1] - z.imag))) / diag for z in ref]
    ok = r_ok and inter == 20 and max(dist) <= 2.0
    record(
        3, ok,
        f"r* error {abs(rstar - math.sqrt(2) * 1.3):.1e}, {inter}/20 radii interleaving, "
        f"8 roots within {max(dist):.3f} cell diagonals of a curve crossing",
    )


def test_criterion_4_analytic_boundary():
    out = {}
    for method, targets in (("circle", (1j, -1j)), ("line", (1j,))):
        fam = make_family(Z2P1, method)
        lo, hi = bracket_boundary(fam)
        s0 = bisect_boundary(fam, lo, hi)
        cands = collision_candidates(fam, s0, s_bad=lo)
        best = min((newton_refine(Z2P1, z) for z in cands), key=lambda r: r.residual)
        out[method] = (abs(s0 - 1.0), min(abs(best.root - t) for t in targets))
    ok = all(e_s <= 1e-6 and e_z <= 1e-9 for e_s, e_z in out.values())
    record(
        4, ok,
        "; ".join(f"{m}: boundary error {e_s:.1e}, root error {e_z:.1e}" for m, (e_s, e_z) in out.items()),
    )


def test_criterion_5_interleaving_invariants():
    rng = np.random.default_rng(5)
    bad = 0
    for _ in range(50):
        f = random_monic(rng, int(rng.integers(1, 11)), real=True)
        n = len(f) - 1
        rstar = dominance_radius(f)
        for r in rng.uniform(rstar, 3 * rstar, 10):
            if r == rstar:
                r = 1.5 * rstar
            s = circle_zeros(f, r)
            seq = np.empty(4 * n)
            seq[0::2], seq[1::2] = s.betas, s.alphas
            sym = all(
                np.all(np.minimum(d, 2 * math.pi - d) <= 1e-10)
                for ang in (s.alphas, s.betas)
                for d in [np.abs(np.sort(ang) - np.sort(np.mod(2 * math.pi - ang, 2 * math.pi)))]
            ) if s.alphas.size == 2 * n else False
            ok = (
                s.alphas.size == 2 * n
                and s.betas.size == 2 * n
                and bool(np.all(np.diff(seq) > 0)) and seq[-1] < 2 * math.pi
                and min(abs(s.betas - 0.0)) <= 1e-12
                and min(abs(s.betas - math.pi)) <= 1e-12
                and check_sign_pattern(f, r)
                and sym
            )
            bad += not ok
    record(5, bad == 0, f"{500 - bad}/500 (polynomial, radius) sections satisfy every invariant")


def test_criterion_6_reduction_consistency():
    rng = np.random.default_rng(6)
    worst_c = worst_l = 0.0
    for _ in range(50):
        f = random_monic(rng, int(rng.integers(1, 13)), real=True)
        n = len(f) - 1
        r, t = rng.uniform(0.05, 3.0), rng.uniform(0, 2 * math.pi)
        p, q = circle_polys(f, r)
        z = evaluate(f, r * np.exp(1j * t))
        err = max(abs(evaluate(p, math.cos(t)) - z.real), abs(math.sin(t) * evaluate(q, math.cos(t)) - z.imag))
        worst_c = max(worst_c, err / max(1.0, r**n))
    for _ in range(50):
        f = random_monic(rng, int(rng.integers(2, 13)))
        n = len(f) - 1
        y, x = rng.uniform(-2, 2), rng.uniform(-3, 3)
        R, I = line_polys(f, y)
        z = complex(x, y)
        err = abs(evaluate(R, x) + 1j * evaluate(I, x) - evaluate(f, z))
        worst_l = max(worst_l, err / max(1.0, abs(z) ** n))
    ok = worst_c <= 1e-9 and worst_l <= 1e-10
    record(6, ok, f"worst scaled circle identity error {worst_c:.1e} (<=1e-9), line shift error {worst_l:.1e} (<=1e-10)")


def test_criterion_7_degenerate_line():
    rng = np.random.default_rng(7)
    bad = 0
    for _ in range(20):
        f = random_monic(rng, int(rng.integers(2, 11)))
        s = line_zeros(f, degenerate_height(f))
        bad += not (s.degenerate and not s.interleaving)
    record(7, bad == 0, f"{20 - bad}/20 degenerate lines flagged degenerate and non-interleaving")


def test_criterion_8_method_agreement(complex_suite):
    polys, circle, _, _ = complex_suite
    worst = 0.0
    bad = 0
    for f, croots in zip(polys, circle):
        lroots = [r.root for r in find_all_roots(f, "line")]
        m = match_root_sets(croots, lroots, 1e-6)
        worst = max(worst, m.max_distance)
        bad += not m.matched
    record(8, bad == 0, f"{200 - bad}/200 circle/line root sets agree at 1e-6 (worst {worst:.1e})")


def _cli(*argv):
    out = io.StringIO()
    return cli.main([str(a) for a in argv], out=out), out.getvalue()


def test_criterion_9_cli(tmp_path):
    good = tmp_path / "z2p1.poly"
    write_poly(good, Z2P1)
    bad = tmp_path / "bad.poly"
    bad.write_text("1\n0\none\n")
    code_ok, _ = _cli("verify", good)
    code_bad, _ = _cli("verify", bad)
    batch = ("verify", "--random", 4, "--degree", 8, "--seed", 42, "--format", "json")
    a, b = _cli(*batch), _cli(*batch)
    json.loads(a[1])
    ok = code_ok == 0 and code_bad == 1 and a == b
    record(
        9, ok,
        f"verify z^2+1 exit {code_ok}, malformed file exit {code_bad}, "
        f"seeded batch bitwise reproducible: {a == b}",
    )


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
