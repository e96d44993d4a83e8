"""scikit-learn compatible front end for the threshold-analysis pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .estimation import analyze


class TailFractionEstimator(BaseEstimator):
    """Estimate the usable tail fraction of a heavy-tailed sample.

    Fitting runs :func:`tailfrac.estimation.analyze` on the flattened
    sample: Hill tail-index estimation on the excesses above ``mu``
    followed by the usable-fraction and threshold-bound arithmetic.
    The estimator composes with scikit-learn tooling (``get_params``,
    ``set_params``, cloning) for use in model-selection loops.

    Parameters
    ----------
    mu : float, default 0.0
        Threshold; only observations strictly above it count as excesses.
    k : int or None, default None
        Number of upper order statistics for the Hill estimator.
        None selects 5% of the excesses.

    Attributes
    ----------
    alpha_ : estimated tail index of the excesses
    sigma_ : estimated GPD scale of the excesses
    usable_fraction_ : 2**-alpha_, the excess fraction above the validity point
    adjusted_percentile_ : validity percentile within the whole sample
    threshold_lower_bound_ : mu + alpha_ * sigma_
    report_ : the full :class:`tailfrac.estimation.FractionReport`
    """

    def __init__(self, mu: float = 0.0, k: int | None = None):
        self.mu = mu
        self.k = k

    def fit(self, X, y=None):
        """Fit on a sample given as a 1-d array or single-column matrix."""
        X = check_array(X, ensure_2d=False, dtype=np.float64, ensure_min_samples=3)
        if X.ndim > 1 and X.shape[1] != 1:
            raise ValueError(f"expected a single variable, got shape {X.shape}")
        report = analyze(X.ravel(), mu=self.mu, k=self.k)
        self.report_ = report
        self.alpha_ = report.alpha_hat
        self.sigma_ = report.sigma_hat
        self.k_ = report.k_used
        self.usable_fraction_ = report.usable_fraction
        self.adjusted_percentile_ = report.adjusted_percentile
        self.threshold_lower_bound_ = report.threshold_lower_bound
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        """Indicator of whether each point lies above the fitted lower bound."""
        check_is_fitted(self, "threshold_lower_bound_")
        X = check_array(X, ensure_2d=False, dtype=np.float64)
        return (X.ravel() > self.threshold_lower_bound_).astype(int)
