"""Seeded random polynomials for test suites and batch verification."""

from __future__ import annotations

import numpy as np


def unit_disk(rng: np.random.Generator, size: int) -> np.ndarray:
    """Points uniformly distributed in the closed unit disk."""
    rad = np.sqrt(rng.uniform(0.0, 1.0, size))
    ang = rng.uniform(0.0, 2 * np.pi, size)
    return rad * np.exp(1j * ang)


def random_monic(rng: np.random.Generator, degree: int, real: bool = False) -> np.ndarray:
    """Monic polynomial with lower coefficients uniform in the unit disk
    (or in ``[-1, 1]`` when ``real``), redrawn until ``f(0) != 0``."""
    while True:
        if real:
            c = np.append(rng.uniform(-1.0, 1.0, degree), 1.0)
        else:
            c = np.append(unit_disk(rng, degree), 1.0 + 0j)
        if c[0] != 0:
            return c


def random_suite(seed: int, count: int, degrees=(2, 10), real: bool = False) -> list[np.ndarray]:
    """``count`` random monic polynomials with degrees drawn uniformly from ``degrees`` (inclusive)."""
    rng = np.random.default_rng(seed)
    lo, hi = degrees
    return [random_monic(rng, int(rng.integers(lo, hi + 1)), real) for _ in range(count)]
