"""Input-validation helpers shared by the numeric modules."""

from __future__ import annotations

import math

import numpy as np


def as_float_array(x, name: str = "x") -> tuple[np.ndarray, bool]:
    """Coerce to a 1-d float array, rejecting NaN; flag scalar input."""
    arr = np.asarray(x, dtype=float)
    if np.isnan(arr).any():
        raise ValueError(f"{name} must not contain NaN")
    return np.atleast_1d(arr).astype(float), arr.ndim == 0


def as_prob_array(p, name: str = "p") -> tuple[np.ndarray, bool]:
    """Like :func:`as_float_array` but restricted to the interval [0, 1)."""
    pv, scalar = as_float_array(p, name)
    if ((pv < 0.0) | (pv >= 1.0)).any():
        raise ValueError(f"{name} must lie in [0, 1)")
    return pv, scalar


def restore_shape(out: np.ndarray, scalar: bool):
    """Return a Python float for scalar input, the array otherwise."""
    return float(out[0]) if scalar else out


def check_positive(**params) -> None:
    """Require every named value to be a positive finite number."""
    for name, value in params.items():
        if isinstance(value, bool):
            raise ValueError(f"{name} must be a positive finite number, got {value!r}")
        try:
            as_float = float(value)
        except (TypeError, ValueError):
            raise ValueError(f"{name} must be a positive finite number, got {value!r}") from None
        if not (math.isfinite(as_float) and as_float > 0):
            raise ValueError(f"{name} must be a positive finite number, got {value!r}")
