"""Two-term tail expansions, their validity thresholds, and percentile rules.

For each family the survival function admits a two-term power expansion

    P(X > x)  ~  c * x**-a  +  d * x**-b,        b > a > 0, c > 0, d != 0,

obtained from the binomial series of the exact tail.  The expansion is a
convergent series only above a family-specific threshold ``x_valid``; the
CDF level there, ``p_valid``, is the percentile above which the largest
order statistics can be used.  For the GPD and Burr families that level
is 1 - 2**-alpha; for the Student t it is tabulated via the incomplete
beta function; the Frechet series converges at every positive x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import Burr, Family, Frechet, Gpd, StudentT
from .special import ln_beta, reg_inc_beta
from .validation import as_float_array, restore_shape


@dataclass(frozen=True)
class TailExpansion:
    """Constants of the two-term tail approximation c*x**-a + d*x**-b.

    ``x_valid`` is the smallest x at which the underlying series
    converges (0 when it converges everywhere) and ``p_valid`` the CDF
    level there.  The equivalent slowly-varying form
    A * x**-a * (1 + B * x**-beta) has A = c, B = d/c, beta = b - a.
    """

    c: float
    a: float
    d: float
    b: float
    x_valid: float
    p_valid: float

    def __post_init__(self):
        for name in ("c", "a", "d", "b", "x_valid", "p_valid"):
            if not math.isfinite(getattr(self, name)):
                # e.g. Student-t coefficients nu**(nu/2 +- 1) overflow
                # float64 around nu ~ 250
                raise ValueError(f"expansion constant {name} is not finite: {getattr(self, name)}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.d == 0:
            raise ValueError("d must be nonzero")
        if not self.b > self.a > 0:
            raise ValueError(f"exponents must satisfy b > a > 0, got a={self.a}, b={self.b}")
        if not self.x_valid >= 0:
            raise ValueError(f"x_valid must be nonnegative, got {self.x_valid}")
        # p_valid lies in [0, 1); it rounds to exactly 1.0 once the
        # exceedance at x_valid underflows double precision (large nu)
        if not 0.0 <= self.p_valid <= 1.0:
            raise ValueError(f"p_valid must lie in [0, 1], got {self.p_valid}")

    def approx_tail(self, x):
        """c*x**-a + d*x**-b for x > 0.

        Below ``x_valid`` the value may be negative or exceed the true
        tail; at the GPD threshold it equals 1 - alpha.
        """
        xv, scalar = as_float_array(x)
        if (xv <= 0.0).any():
            raise ValueError("x must be positive")
        return restore_shape(self.c * xv ** -self.a + self.d * xv ** -self.b, scalar)


def expansion(family: Family) -> TailExpansion:
    """The two-term tail expansion of ``family``, with validity threshold."""
    try:
        return _expansion(family)
    except OverflowError as exc:
        raise ValueError(f"expansion constants overflow float64 for {family!r}") from exc


def _expansion(family: Family) -> TailExpansion:
    if isinstance(family, Gpd):
        sigma, alpha = family.sigma, family.alpha
        return TailExpansion(
            c=(alpha * sigma) ** alpha,
            a=alpha,
            d=-(alpha ** (alpha + 2.0)) * sigma ** (alpha + 1.0),
            b=alpha + 1.0,
            x_valid=alpha * sigma,
            p_valid=-math.expm1(-alpha * math.log(2.0)),
        )
    if isinstance(family, Burr):
        lam, tau, alpha = family.lam, family.tau, family.alpha
        # second coefficient from the binomial series of (1 + lam*x**-tau)**-alpha;
        # it is sometimes misquoted as -alpha*lam**alpha, which the asymptotic
        # oracle in the test suite rules out for lam != 1
        return TailExpansion(
            c=lam ** alpha,
            a=alpha * tau,
            d=-alpha * lam ** (alpha + 1.0),
            b=(alpha + 1.0) * tau,
            x_valid=lam ** (1.0 / tau),
            p_valid=-math.expm1(-alpha * math.log(2.0)),
        )
    if isinstance(family, Frechet):
        alpha = family.alpha
        # the series 1 - exp(-x**-alpha) = x**-alpha - x**-2a/2 + ... converges
        # for every x > 0; x > 1 is only a quality guideline, recorded as p_valid
        return TailExpansion(
            c=1.0,
            a=alpha,
            d=-0.5,
            b=2.0 * alpha,
            x_valid=0.0,
            p_valid=math.exp(-1.0),
        )
    if isinstance(family, StudentT):
        nu = family.nu
        beta_norm = math.exp(ln_beta(nu / 2.0, 0.5))
        return TailExpansion(
            c=nu ** (nu / 2.0 - 1.0) / beta_norm,
            a=nu,
            d=-0.5 * nu ** (nu / 2.0 + 1.0) * (nu + 1.0) / ((nu + 2.0) * beta_norm),
            b=nu + 2.0,
            x_valid=math.sqrt(nu),
            p_valid=1.0 - student_validity_exceedance(nu),
        )
    raise TypeError(f"unsupported family: {family!r}")


def validity_percentile(family: Family) -> float:
    """CDF level above which the family's tail expansion is valid."""
    return expansion(family).p_valid


def adjusted_percentile(n_below: int, n_total: int, alpha: float) -> float:
    """Validity percentile relative to the whole sample.

    With ``n_below`` observations at or under the threshold and
    ``n_total - n_below`` excesses above it, the expansion applies to
    observations beyond the N/n + ((n-N)/n) * (1 - 2**-alpha) percentile.
    Reduces to 1 - 2**-alpha when nothing falls below the threshold.
    """
    if not (isinstance(n_below, (int, np.integer)) and isinstance(n_total, (int, np.integer))):
        raise ValueError("counts must be integers")
    if n_total <= 0 or n_below < 0 or n_below >= n_total:
        raise ValueError(
            f"need 0 <= n_below < n_total, got n_below={n_below}, n_total={n_total}"
        )
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    frac_below = n_below / n_total
    return frac_below + (1.0 - frac_below) * -math.expm1(-alpha * math.log(2.0))


def student_validity_exceedance(nu: float) -> float:
    """One-sided P(X > sqrt(nu)) for a Student t: 0.5 * I_{0.5}(nu/2, 1/2)."""
    if not nu > 0:
        raise ValueError(f"nu must be positive, got {nu}")
    return 0.5 * reg_inc_beta(0.5, nu / 2.0, 0.5)


@dataclass(frozen=True)
class StudentValidityRow:
    """One tabulated (nu, P(X > sqrt(nu))) pair."""

    nu: float
    prob_one_sided: float

    @property
    def prob_two_sided(self) -> float:
        """Proportion when negative observations count as well."""
        return 2.0 * self.prob_one_sided


TWO_SIDED_NOTE = (
    "probabilities are one-sided, P(X > sqrt(nu)); counting both tails "
    "doubles the proportions"
)


def student_validity_table(nu_values) -> list[StudentValidityRow]:
    """Validity exceedance per degrees of freedom; see TWO_SIDED_NOTE."""
    return [StudentValidityRow(float(nu), student_validity_exceedance(nu)) for nu in nu_values]
