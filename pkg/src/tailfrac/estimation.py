"""Tail-index estimation and the threshold-analysis pipeline.

Given raw observations and a threshold ``mu``, :func:`analyze` estimates
the tail index of the excesses with the Hill estimator (Hill, 1975),
estimates the GPD scale by moment inversion, and turns both into the
practical outputs: the usable fraction 2**-alpha of excesses on which the
two-term tail expansion holds, the corresponding percentile within the
whole sample, and the lower bound mu + alpha*sigma for where power-law
tail behaviour starts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DataFormatError, DegenerateDataError
from .expansion import adjusted_percentile
from .validation import check_positive

# -log(0.1) = 2.3 is sometimes quoted as the index matching DuMouchel's
# (1983) rule of using at most the largest 10% of observations, but that
# figure is the natural-log value; the exceedance condition is binary,
# so the matching index is -log2(0.1) = 3.3219.
NATURAL_LOG_TEN_PERCENT_ALPHA = 2.3


def hill(values, k: int) -> float:
    """Hill (1975) tail-index estimate from the top ``k`` order statistics.

    ``values`` must be sorted ascending; the estimate is the reciprocal
    mean log-excess of the k largest values over the (k+1)-th largest,
    which must be strictly positive.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"values must be one-dimensional, got shape {arr.shape}")
    if np.isnan(arr).any():
        raise ValueError("values must not contain NaN")
    n = arr.size
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in [1, {n - 1}] for a sample of size {n}, got {k}")
    if (np.diff(arr) < 0).any():
        raise ValueError("values must be sorted ascending")
    pivot = arr[n - k - 1]
    if not pivot > 0:
        raise ValueError(f"the (k+1)-th largest value must be positive, got {pivot}")
    mean_log_excess = float(np.mean(np.log(arr[n - k:]) - math.log(pivot)))
    if mean_log_excess <= 0.0:
        raise DegenerateDataError(
            f"top {k} values are all tied with the pivot {pivot}; "
            "mean log-excess is zero"
        )
    return 1.0 / mean_log_excess


def usable_fraction(alpha: float) -> float:
    """Fraction 2**-alpha of excesses lying above the validity percentile."""
    check_positive(alpha=alpha)
    return 2.0 ** -alpha


def alpha_for_fraction(p: float) -> float:
    """Tail index whose usable fraction is ``p``: the inverse -log2(p)."""
    try:
        p = float(p)
    except (TypeError, ValueError):
        raise ValueError(f"p must lie in (0, 1), got {p!r}") from None
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p!r}")
    return -math.log2(p)


def threshold_lower_bound(mu: float, sigma: float, alpha: float) -> float:
    """Smallest observation value with power-law tail behaviour: mu + alpha*sigma."""
    check_positive(sigma=sigma, alpha=alpha)
    return mu + alpha * sigma


def default_order_count(n_excess: int) -> int:
    """Default k for Hill estimation: 5% of the excesses, at least 1, at most n-1."""
    if n_excess < 2:
        raise DegenerateDataError(f"need at least 2 excesses, got {n_excess}")
    return min(max(math.ceil(0.05 * n_excess), 1), n_excess - 1)


@dataclass(frozen=True)
class FractionReport:
    """Full output of :func:`analyze`.

    ``sigma_method`` records which scale estimator applied: "mean" for
    the moment inversion sigma = mean * (alpha-1)/alpha (finite-mean
    case alpha > 1), "median" for the median inversion used as the
    fallback when alpha <= 1.
    """

    alpha_hat: float
    k_used: int
    n: int
    n_below: int
    mu: float
    sigma_hat: float
    sigma_method: str
    usable_fraction: float
    adjusted_percentile: float
    threshold_lower_bound: float


def analyze(data, mu: float, k: int | None = None) -> FractionReport:
    """Run the full pipeline on raw observations with threshold ``mu``.

    Splits the data into ``n_below`` values at or under the threshold
    and excesses z - mu above it, Hill-estimates the excess tail index
    from the top ``k`` order statistics (default: 5% of the excesses),
    and assembles the derived quantities into a :class:`FractionReport`.
    """
    arr = np.asarray(data, dtype=float).ravel()
    if not np.isfinite(arr).all():
        raise ValueError("data must be finite")
    try:
        mu = float(mu)
    except (TypeError, ValueError):
        raise ValueError(f"mu must be a finite number, got {mu!r}") from None
    if not math.isfinite(mu):
        raise ValueError(f"mu must be a finite number, got {mu!r}")
    n = arr.size
    excess = arr[arr > mu] - mu
    n_below = n - excess.size
    if excess.size < 2:
        raise DegenerateDataError(
            f"need at least 2 observations strictly above mu={mu}, "
            f"found {excess.size} of {n}"
        )
    if k is None:
        k = default_order_count(excess.size)
    elif not 1 <= k <= excess.size - 1:
        raise ValueError(
            f"k must lie in [1, {excess.size - 1}] for {excess.size} excesses, got {k}"
        )
    excess.sort()
    alpha_hat = hill(excess, k)
    if alpha_hat > 1.0:
        sigma_hat = float(excess.mean()) * (alpha_hat - 1.0) / alpha_hat
        sigma_method = "mean"
    else:
        # infinite-mean regime: invert the GPD median alpha*sigma*(2**(1/alpha)-1)
        sigma_hat = float(np.median(excess)) / (alpha_hat * math.expm1(math.log(2.0) / alpha_hat))
        sigma_method = "median"
    return FractionReport(
        alpha_hat=alpha_hat,
        k_used=int(k),
        n=n,
        n_below=n_below,
        mu=float(mu),
        sigma_hat=sigma_hat,
        sigma_method=sigma_method,
        usable_fraction=usable_fraction(alpha_hat),
        adjusted_percentile=adjusted_percentile(n_below, n, alpha_hat),
        threshold_lower_bound=threshold_lower_bound(mu, sigma_hat, alpha_hat),
    )


def load_samples(path) -> np.ndarray:
    """Read a data file: one finite number per line, blank lines ignored."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}", path=str(path)) from exc
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            value = float(stripped)
        except ValueError:
            raise DataFormatError(
                f"{path}:{lineno}: not a number: {stripped!r}", path=str(path), line=lineno
            ) from None
        if not math.isfinite(value):
            raise DataFormatError(
                f"{path}:{lineno}: non-finite value {stripped!r}", path=str(path), line=lineno
            )
        values.append(value)
    return np.asarray(values, dtype=float)
