"""Seeded Monte Carlo experiments and figure-style data generators.

``figure_data`` reproduces the diagnostic plot construction: simulate a
sample, keep the largest fraction, and record the exact and two-term
approximate tails at each kept order statistic against the empirical
distribution function (j - 1) / m.  ``curve_data`` evaluates both tails
on a deterministic grid instead.  All randomness comes from the
counter-based streams in :mod:`tailfrac.rng`, so replicates are
order-independent and reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import Family
from .expansion import expansion


@dataclass(frozen=True)
class TailRow:
    """One comparison record: point, empirical DF, exact and approximate tails.

    For sampled rows ``ecdf`` is (j - 1) / m over the m kept order
    statistics; for grid rows it carries the exact CDF instead.
    ``approx_tail`` may be negative below the expansion's validity
    threshold.
    """

    x: float
    ecdf: float
    exact_tail: float
    approx_tail: float


def mc_exceedance(family: Family, x0: float, n: int, seed, stream=0) -> float:
    """Fraction of ``n`` seeded draws strictly exceeding ``x0``."""
    if math.isnan(x0):
        raise ValueError("x0 must not be NaN")
    draws = family.sample(n, seed, stream)
    return float(np.mean(draws > x0))


def figure_data(family: Family, n: int, top_fraction: float, seed, stream=0) -> list[TailRow]:
    """Exact-versus-approximate tail rows for the largest draws of a sample.

    Draws ``n`` values, keeps the largest m = floor(top_fraction * n) in
    ascending order, and emits one row per kept point with
    ecdf = (j - 1) / m.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if not 0.0 < top_fraction <= 1.0:
        raise ValueError(f"top_fraction must lie in (0, 1], got {top_fraction}")
    m = math.floor(top_fraction * n)
    if m < 1:
        raise ValueError(f"empty selection: floor({top_fraction} * {n}) < 1")
    kept = np.sort(family.sample(n, seed, stream))[n - m:]
    approx = expansion(family).approx_tail
    exact_tail = family.tail(kept)
    approx_tail = approx(kept)
    return [
        TailRow(float(kept[j]), j / m, float(exact_tail[j]), float(approx_tail[j]))
        for j in range(m)
    ]


def curve_data(family: Family, x_min: float, x_max: float, points: int) -> list[TailRow]:
    """Exact and approximate tails on a grid; ecdf column carries the CDF.

    The grid is log-spaced (tails span decades); a nonpositive ``x_min``
    falls back to a linear grid clamped to the support, with the zero
    endpoint nudged to half a step because the power expansion needs
    x > 0.
    """
    if not (math.isfinite(x_min) and math.isfinite(x_max) and x_min < x_max):
        raise ValueError(f"need finite x_min < x_max, got [{x_min}, {x_max}]")
    if not x_max > 0:
        raise ValueError(f"x_max must be positive, got {x_max}")
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    if x_min > 0:
        grid = np.geomspace(x_min, x_max, points)
    else:
        grid = np.linspace(max(x_min, 0.0), x_max, points)
        grid[0] = 0.5 * grid[1]
    approx = expansion(family).approx_tail
    exact_tail = family.tail(grid)
    approx_tail = approx(grid)
    cdf = family.cdf(grid)
    return [
        TailRow(float(grid[i]), float(cdf[i]), float(exact_tail[i]), float(approx_tail[i]))
        for i in range(points)
    ]
