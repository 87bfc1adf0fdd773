import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gauss_interleave.circle import (
    CircleSection,
    check_sign_pattern,
    circle_polys,
    circle_zeros,
    cyclic_min_gap,
    dominance_radius,
    is_interleaving,
    sign_grid,
)
from gauss_interleave.polynomial import evaluate
from gauss_interleave.sampling import random_monic

from conftest import FIG1, Z2P1

PI = math.pi


def _real_monic(seed, degree):
    return random_monic(np.random.default_rng(seed), degree, real=True)


def test_dominance_radius_examples():
    assert dominance_radius(Z2P1) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert dominance_radius([0, 0, 0, 1.0]) == 1.0
    assert dominance_radius(FIG1) == pytest.approx(math.sqrt(2) * 1.3, abs=1e-12)


def test_dominance_radius_requires_monic():
    with pytest.raises(ValueError):
        dominance_radius([1.0, 2.0])


@pytest.mark.parametrize("r", [0.3, 1.0, 2.0, 5.0])
def test_circle_polys_examples(r):
    p, q = circle_polys(Z2P1, r)
    np.testing.assert_allclose(p, [1 - r * r, 0, 2 * r * r], atol=1e-12 * max(1, r * r))
    np.testing.assert_allclose(np.pad(q, (0, 2 - len(q))), [0, 2 * r * r], atol=1e-12 * max(1, r * r))
    p, q = circle_polys([0.0, 1.0], r)
    np.testing.assert_allclose(np.pad(p, (0, 2 - len(p))), [0, r], atol=1e-15 * max(1, r))
    np.testing.assert_allclose(q, [r], atol=1e-15 * max(1, r))


def test_circle_polys_errors():
    with pytest.raises(ValueError):
        circle_polys(Z2P1, 0.0)
    with pytest.raises(ValueError):
        circle_polys([1j, 1.0], 1.0)


@pytest.mark.parametrize("seed", range(5))
def test_circle_polys_degree_bounds(seed):
    f = _real_monic(seed, 3 + seed)
    p, q = circle_polys(f, 1.7)
    n = len(f) - 1
    assert len(p) - 1 <= n
    assert len(q) - 1 <= n - 1


def test_circle_zeros_r2():
    s = circle_zeros(Z2P1, 2.0)
    np.testing.assert_allclose(s.alphas, [0.91174, 2.22985, 4.05333, 5.37144], atol=1e-5)
    c = math.sqrt(3 / 8)
    np.testing.assert_allclose(np.cos(s.alphas), [c, -c, -c, c], atol=1e-13)
    np.testing.assert_allclose(s.betas, [0, PI / 2, PI, 3 * PI / 2], atol=1e-13)
    assert s.interleaving
    assert is_interleaving(s)
    assert s.min_gap > 0


def test_circle_zeros_r1_double_root():
    s = circle_zeros(Z2P1, 1.0)
    np.testing.assert_allclose(s.alphas, [PI / 2, 3 * PI / 2], atol=1e-12)
    assert not s.interleaving
    assert s.min_gap == 0


def test_circle_zeros_r_half():
    s = circle_zeros(Z2P1, 0.5)
    assert s.alphas.size == 0
    assert not s.interleaving


def test_is_interleaving_cases():
    good = circle_zeros(Z2P1, 2.0)
    assert is_interleaving(good)
    empty = CircleSection(2.0, 2, good.p, good.q, np.array([]), good.betas, False, math.inf)
    assert not is_interleaving(empty)
    shared = good.alphas.copy()
    shared[0] = good.betas[1]
    touched = CircleSection(2.0, 2, good.p, good.q, shared, good.betas, False, 0.0)
    assert not is_interleaving(touched)
    assert cyclic_min_gap(shared, good.betas) == 0


def test_circle_zeros_errors():
    with pytest.raises(ValueError):
        circle_zeros(Z2P1, -1.0)
    with pytest.raises(ValueError):
        circle_zeros([0.0, 1.0, 1.0], 1.0)


def test_sign_grid():
    g = sign_grid(2)
    assert g.size == 9
    assert g[1] == pytest.approx(PI / 8)
    assert g[2] == pytest.approx(3 * PI / 8)


def test_check_sign_pattern_examples():
    assert check_sign_pattern(Z2P1, 2.0)
    with pytest.raises(ValueError):
        check_sign_pattern(Z2P1, 1.0)
    for seed in range(10):
        f = _real_monic(seed, 2 + seed % 9)
        assert check_sign_pattern(f, 1.01 * dominance_radius(f))
    g = random_monic(np.random.default_rng(7), 5)
    assert check_sign_pattern(g, 1.01 * dominance_radius(g))


def test_near_section_does_not_change_result():
    f = FIG1
    a = circle_zeros(f, 2.0)
    b = circle_zeros(f, 1.95, near=a)
    c = circle_zeros(f, 1.95)
    np.testing.assert_allclose(b.alphas, c.alphas, atol=1e-12)
    np.testing.assert_allclose(b.betas, c.betas, atol=1e-12)


def test_to_dict_keys():
    d = circle_zeros(Z2P1, 2.0).to_dict()
    assert list(d) == ["family", "r", "N", "alphas", "betas", "interleaving", "min_gap", "p", "q"]
    assert d["family"] == "circle"


def test_large_radius_scaling():
    f = _real_monic(3, 24)
    s = circle_zeros(f, 1e6)
    assert s.interleaving
    assert np.all(np.isfinite(s.p))
    with pytest.raises(OverflowError):
        circle_zeros(_real_monic(3, 60), 1e6)


seeds = st.integers(0, 2**31)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 12), st.floats(0.05, 3.0))
def test_reduction_consistency(seed, n, r):
    f = _real_monic(seed, n)
    p, q = circle_polys(f, r)
    theta = np.linspace(0, 2 * PI, 64, endpoint=False)
    z = evaluate(f, r * np.exp(1j * theta))
    bound = 1e-9 * max(1.0, r**n)
    assert np.max(np.abs(evaluate(p, np.cos(theta)) - z.real)) <= bound
    assert np.max(np.abs(np.sin(theta) * evaluate(q, np.cos(theta)) - z.imag)) <= bound


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 10), st.floats(1.001, 3.0))
def test_beyond_dominance_interleaves(seed, n, k):
    f = _real_monic(seed, n)
    s = circle_zeros(f, k * dominance_radius(f))
    assert s.alphas.size == 2 * n and s.betas.size == 2 * n
    assert s.interleaving


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 10), st.floats(0.1, 3.0))
def test_reflection_symmetry_and_counts(seed, n, r):
    f = _real_monic(seed, n)
    s = circle_zeros(f, r)
    assert s.alphas.size <= 2 * n and s.betas.size <= 2 * n
    for ang in (s.alphas, s.betas):
        refl = np.sort(np.mod(2 * PI - ang, 2 * PI))
        d = np.abs(np.sort(ang) - refl)
        assert np.all(np.minimum(d, 2 * PI - d) <= 1e-10)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 10), st.floats(1.001, 2.0))
def test_sign_alternation(seed, n, k):
    f = _real_monic(seed, n)
    r = k * dominance_radius(f)
    s = circle_zeros(f, r)
    a = s.alphas
    mids = 0.5 * (a + np.append(a[1:], a[0] + 2 * PI))
    signs = np.sign(evaluate(f, r * np.exp(1j * mids)).real)
    assert np.all(signs * np.roll(signs, 1) < 0)
