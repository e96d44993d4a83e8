"""The four heavy-tailed families under study.

Each family is an immutable parameter record with vectorized ``cdf``,
``tail``, ``quantile`` and seeded ``sample`` methods.  ``tail`` is always
a direct closed form (never 1 - cdf), so it keeps full relative precision
arbitrarily far into the tail; in particular the Student-t tail goes
through the incomplete beta identity ``P(X > x) = I_y(nu/2, 1/2) / 2``
with ``y = nu / (nu + x**2)``.

Points below a family's support return cdf 0 and tail 1 rather than
raising, which keeps comparisons against mixed empirical data simple.
Sampling is inverse-CDF on uniforms from :mod:`tailfrac.rng`, one uniform
per draw, so a (seed, stream) pair fixes the output on every platform.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass

import numpy as np

from .rng import uniform_open
from .special import reg_inc_beta, reg_inc_beta_inv
from .validation import as_float_array, as_prob_array, check_positive, restore_shape


class Family(abc.ABC):
    """Base class for the parametric families; see the module docstring."""

    @abc.abstractmethod
    def cdf(self, x):
        """P(X <= x), elementwise."""

    @abc.abstractmethod
    def tail(self, x):
        """P(X > x) in closed form, elementwise."""

    @abc.abstractmethod
    def quantile(self, p):
        """Inverse CDF for p in [0, 1), elementwise."""

    def sample(self, n: int, seed, stream=0) -> np.ndarray:
        """n inverse-CDF draws from the (seed, stream) uniform sequence."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        return self.quantile(uniform_open(seed, n, stream))


@dataclass(frozen=True)
class Gpd(Family):
    """Generalized Pareto with scale ``sigma`` and tail index ``alpha``.

    The shape parameter of the usual (xi, sigma) parameterization is
    xi = 1/alpha; the tail function is (1 + x / (alpha*sigma)) ** -alpha
    on x >= 0.
    """

    sigma: float
    alpha: float

    def __post_init__(self):
        check_positive(sigma=self.sigma, alpha=self.alpha)

    def cdf(self, x):
        xv, scalar = as_float_array(x)
        z = np.maximum(xv, 0.0) / (self.alpha * self.sigma)
        return restore_shape(-np.expm1(-self.alpha * np.log1p(z)), scalar)

    def tail(self, x):
        xv, scalar = as_float_array(x)
        z = np.maximum(xv, 0.0) / (self.alpha * self.sigma)
        return restore_shape(np.exp(-self.alpha * np.log1p(z)), scalar)

    def quantile(self, p):
        pv, scalar = as_prob_array(p)
        out = self.alpha * self.sigma * np.expm1(-np.log1p(-pv) / self.alpha)
        return restore_shape(out, scalar)


@dataclass(frozen=True)
class Burr(Family):
    """Burr XII with scale ``lam``, power ``tau`` and index ``alpha``.

    Tail function lam**alpha / (lam + x**tau) ** alpha on x > 0; the
    power-law tail index of X is alpha * tau.
    """

    lam: float
    tau: float
    alpha: float

    def __post_init__(self):
        check_positive(lam=self.lam, tau=self.tau, alpha=self.alpha)

    def _scaled_power(self, xv: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):  # x**tau -> inf is a valid limit
            return np.maximum(xv, 0.0) ** self.tau / self.lam

    def cdf(self, x):
        xv, scalar = as_float_array(x)
        return restore_shape(-np.expm1(-self.alpha * np.log1p(self._scaled_power(xv))), scalar)

    def tail(self, x):
        xv, scalar = as_float_array(x)
        return restore_shape(np.exp(-self.alpha * np.log1p(self._scaled_power(xv))), scalar)

    def quantile(self, p):
        pv, scalar = as_prob_array(p)
        core = self.lam * np.expm1(-np.log1p(-pv) / self.alpha)
        return restore_shape(core ** (1.0 / self.tau), scalar)


@dataclass(frozen=True)
class Frechet(Family):
    """Standard (unit-scale) Frechet with index ``alpha``: F(x) = exp(-x**-alpha)."""

    alpha: float

    def __post_init__(self):
        check_positive(alpha=self.alpha)

    def cdf(self, x):
        xv, scalar = as_float_array(x)
        out = np.zeros_like(xv)
        pos = xv > 0.0
        with np.errstate(over="ignore"):  # x**-alpha -> inf near 0 gives cdf 0
            out[pos] = np.exp(-xv[pos] ** -self.alpha)
        return restore_shape(out, scalar)

    def tail(self, x):
        xv, scalar = as_float_array(x)
        out = np.ones_like(xv)
        pos = xv > 0.0
        with np.errstate(over="ignore"):
            out[pos] = -np.expm1(-xv[pos] ** -self.alpha)
        return restore_shape(out, scalar)

    def quantile(self, p):
        pv, scalar = as_prob_array(p)
        out = np.zeros_like(pv)
        pos = pv > 0.0
        out[pos] = (-np.log(pv[pos])) ** (-1.0 / self.alpha)
        return restore_shape(out, scalar)


@dataclass(frozen=True)
class StudentT(Family):
    """Student t with ``nu`` degrees of freedom (two-sided cdf, support R)."""

    nu: float

    def __post_init__(self):
        check_positive(nu=self.nu)

    def _half_tail(self, xv: np.ndarray) -> np.ndarray:
        # P(X > |x|) via the incomplete beta identity
        y = self.nu / (self.nu + xv * xv)
        return 0.5 * reg_inc_beta(y, self.nu / 2.0, 0.5)

    def cdf(self, x):
        xv, scalar = as_float_array(x)
        half = self._half_tail(xv)
        return restore_shape(np.where(xv >= 0.0, 1.0 - half, half), scalar)

    def tail(self, x):
        xv, scalar = as_float_array(x)
        half = self._half_tail(xv)
        return restore_shape(np.where(xv >= 0.0, half, 1.0 - half), scalar)

    def quantile(self, p):
        pv, scalar = as_prob_array(p)
        s = pv - 0.5
        mag = np.empty_like(pv)
        # quantile of |X| at level 2|s|; solve for whichever side of the
        # beta variable is small so the root never sits next to 1, where
        # I_y(nu/2, 1/2) is too steep to invert accurately
        near = np.abs(s) < 0.25
        with np.errstate(divide="ignore"):  # p = 0 maps to -inf
            if near.any():
                z = reg_inc_beta_inv(2.0 * np.abs(s[near]), 0.5, self.nu / 2.0)
                mag[near] = np.sqrt(self.nu * z / (1.0 - z))
            far = ~near
            if far.any():
                y = reg_inc_beta_inv(1.0 - 2.0 * np.abs(s[far]), self.nu / 2.0, 0.5)
                mag[far] = np.sqrt(self.nu * (1.0 - y) / y)
        return restore_shape(np.where(s >= 0.0, mag, -mag), scalar)
