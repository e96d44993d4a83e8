import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from tailfrac.distributions import Frechet, Gpd, StudentT
from tailfrac.expansion import expansion
from tailfrac.simulation import TailRow, curve_data, figure_data, mc_exceedance


# --- mc_exceedance ----------------------------------------------------------


def test_mc_exceedance_matches_closed_form():
    fam = Gpd(sigma=0.5, alpha=2.0)
    est = mc_exceedance(fam, 1.0, 10 ** 6, seed=42)
    assert abs(est - 0.25) < 4.0 * math.sqrt(0.25 * 0.75 / 10 ** 6)


def test_mc_exceedance_below_support_is_one():
    assert mc_exceedance(Gpd(1.0, 1.0), -1e308, 1000, seed=1) == 1.0
    assert mc_exceedance(Frechet(2.0), 0.0, 1000, seed=1) == 1.0


def test_mc_exceedance_deterministic():
    fam = Frechet(1.0)
    assert mc_exceedance(fam, 1.0, 5000, seed=9) == mc_exceedance(fam, 1.0, 5000, seed=9)


def test_mc_exceedance_rejects_nan():
    with pytest.raises(ValueError):
        mc_exceedance(Gpd(1.0, 1.0), math.nan, 10, seed=1)


# --- figure_data ------------------------------------------------------------


def test_figure_data_row_counts():
    assert len(figure_data(Gpd(0.5, 1.0), 250, 0.25, seed=42)) == 62
    assert len(figure_data(Gpd(2.0, 2.0), 250, 0.25, seed=42)) == 62
    assert len(figure_data(StudentT(2.0), 1000, 0.20, seed=42)) == 200


def test_figure_data_row_structure():
    fam = Gpd(0.5, 1.0)
    rows = figure_data(fam, 250, 0.25, seed=42)
    m = len(rows)
    xs = [row.x for row in rows]
    assert xs == sorted(xs)
    assert [row.ecdf for row in rows] == [j / m for j in range(m)]
    ex = expansion(fam)
    for row in rows:
        assert row.exact_tail == pytest.approx(fam.tail(row.x), abs=1e-12)
        assert row.approx_tail == pytest.approx(ex.approx_tail(row.x), abs=1e-12)
    # exact tail strictly decreasing along the sorted points
    tails = [row.exact_tail for row in rows]
    assert all(b < a for a, b in zip(tails, tails[1:]))


def test_figure_data_error_bound_in_tail():
    for sigma, alpha in [(0.5, 1.0), (2.0, 2.0)]:
        fam = Gpd(sigma, alpha)
        scale = alpha * sigma
        for row in figure_data(fam, 250, 0.25, seed=42):
            if row.x >= 4.0 * scale:
                bound = alpha * (alpha + 1.0) * (scale / row.x) ** 2 * row.exact_tail
                assert abs(row.approx_tail - row.exact_tail) <= bound


def test_figure_data_deterministic():
    a = figure_data(Gpd(0.5, 1.0), 100, 0.5, seed=7)
    b = figure_data(Gpd(0.5, 1.0), 100, 0.5, seed=7)
    assert a == b  # bit-identical dataclass rows
    c = figure_data(Gpd(0.5, 1.0), 100, 0.5, seed=8)
    assert a != c


def test_figure_data_parallel_matches_serial():
    fam = StudentT(2.0)
    serial = [figure_data(fam, 60, 0.25, seed=3, stream=r) for r in range(6)]
    with ThreadPoolExecutor(max_workers=6) as pool:
        parallel = list(
            pool.map(lambda r: figure_data(fam, 60, 0.25, seed=3, stream=r), range(6))
        )
    assert serial == parallel


def test_figure_data_domain_errors():
    fam = Gpd(1.0, 1.0)
    with pytest.raises(ValueError):
        figure_data(fam, 3, 0.5, seed=1)
    with pytest.raises(ValueError):
        figure_data(fam, 250, 0.0, seed=1)
    with pytest.raises(ValueError):
        figure_data(fam, 250, 1.5, seed=1)
    with pytest.raises(ValueError):
        figure_data(fam, 5, 0.1, seed=1)  # floor(0.5) = 0 kept points


# --- curve_data -------------------------------------------------------------


def test_curve_data_contains_expected_values():
    fam = Gpd(0.5, 2.0)
    rows = curve_data(fam, 1.0, 10.0, 2)
    assert [row.x for row in rows] == [1.0, 10.0]
    assert rows[0].exact_tail == pytest.approx(0.25, abs=1e-14)
    assert rows[0].approx_tail == pytest.approx(-1.0, abs=1e-14)
    assert rows[1].exact_tail == pytest.approx(0.0082645, abs=1e-7)
    assert rows[1].approx_tail == pytest.approx(0.008, abs=1e-15)


def test_curve_data_grid_properties():
    fam = Frechet(1.5)
    rows = curve_data(fam, 0.1, 100.0, 50)
    assert len(rows) == 50
    xs = np.array([row.x for row in rows])
    assert xs[0] == 0.1 and xs[-1] == 100.0
    ratios = xs[1:] / xs[:-1]
    assert np.allclose(ratios, ratios[0], rtol=1e-9)  # log spacing
    for row in rows[::7]:
        assert row.ecdf == pytest.approx(fam.cdf(row.x), abs=1e-14)


def test_curve_data_linear_fallback_clamps_to_support():
    rows = curve_data(Gpd(1.0, 1.0), -1.0, 10.0, 11)
    xs = [row.x for row in rows]
    assert xs[0] == pytest.approx(0.5, abs=1e-12)  # half the first step
    assert xs[1] == pytest.approx(1.0, abs=1e-12)
    assert all(x > 0.0 for x in xs)
    assert xs[-1] == 10.0


def test_curve_data_domain_errors():
    fam = Gpd(1.0, 1.0)
    with pytest.raises(ValueError):
        curve_data(fam, 5.0, 1.0, 10)  # inverted
    with pytest.raises(ValueError):
        curve_data(fam, 1.0, 10.0, 1)
    with pytest.raises(ValueError):
        curve_data(fam, -2.0, -1.0, 10)


def test_tail_row_is_plain_record():
    row = TailRow(x=1.0, ecdf=0.5, exact_tail=0.25, approx_tail=0.2)
    assert (row.x, row.ecdf, row.exact_tail, row.approx_tail) == (1.0, 0.5, 0.25, 0.2)
