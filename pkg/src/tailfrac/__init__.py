"""Peaks-over-threshold tail analysis with second-order tail expansions.

Four heavy-tailed families (generalized Pareto, Burr, Frechet,
Student t), their two-term tail expansions with validity thresholds and
percentiles, Hill tail-index estimation, and seeded Monte Carlo helpers.
See the README for the command-line interface.
"""

from .distributions import Burr, Family, Frechet, Gpd, StudentT
from .errors import ConvergenceError, DataFormatError, DegenerateDataError
from .estimation import (
    FractionReport,
    alpha_for_fraction,
    analyze,
    default_order_count,
    hill,
    load_samples,
    threshold_lower_bound,
    usable_fraction,
)
from .expansion import (
    StudentValidityRow,
    TailExpansion,
    adjusted_percentile,
    expansion,
    student_validity_exceedance,
    student_validity_table,
    validity_percentile,
)
from .rng import uniform_open
from .simulation import TailRow, curve_data, figure_data, mc_exceedance
from .special import ln_beta, reg_inc_beta, reg_inc_beta_inv

__all__ = [
    "Burr",
    "ConvergenceError",
    "DataFormatError",
    "DegenerateDataError",
    "Family",
    "FractionReport",
    "Frechet",
    "Gpd",
    "StudentT",
    "StudentValidityRow",
    "TailExpansion",
    "TailFractionEstimator",
    "TailRow",
    "adjusted_percentile",
    "alpha_for_fraction",
    "analyze",
    "curve_data",
    "default_order_count",
    "expansion",
    "figure_data",
    "hill",
    "ln_beta",
    "load_samples",
    "mc_exceedance",
    "reg_inc_beta",
    "reg_inc_beta_inv",
    "student_validity_exceedance",
    "student_validity_table",
    "threshold_lower_bound",
    "uniform_open",
    "usable_fraction",
    "validity_percentile",
]

__version__ = "0.1.0"


def __getattr__(name):
    # deferred so that the CLI does not pay the scikit-learn import cost
    if name == "TailFractionEstimator":
        from .estimator import TailFractionEstimator

        return TailFractionEstimator
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
