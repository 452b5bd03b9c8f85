"""Moments of the region count when each of n cuts succeeds with probability p.

With X ~ Bin(n, p) successful cuts in general position, the region
count is R = sum_{i<=d} C(X, i).  Everything here is a route to E(R)
and V(R): exact polynomial forms (derived through factorial moments of
the binomial), full-distribution enumeration, the large-n asymptotics,
and the Chebyshev tail bound they feed.

The closed forms and the enumeration are deliberately independent code
paths; the test suite holds them against each other and against an
exact rational-arithmetic evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

#: Largest n the enumeration routes accept unless the caller raises it.
ENUMERATION_BOUND = 1000


class UnsupportedDimensionError(ValueError):
    """No closed form is implemented for this dimension."""


class EnumerationBoundError(ValueError):
    """The requested n exceeds the enumeration limit."""


@dataclass(frozen=True)
class CutModel:
    """n attempted cuts, each kept with probability p, in dimension d."""

    n: int
    p: float
    d: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"cut count must be positive, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability {self.p!r} outside [0, 1]")
        if self.d < 1:
            raise ValueError(f"dimension must be at least 1, got {self.d}")


@dataclass(frozen=True)
class RegionMoments:
    """Moments of the region count plus the route that produced them.

    second_moment is None when the route does not define one (the
    asymptotic route only approximates the variance).  method is one of
    "exact_enumeration", "closed_form", "asymptotic", "monte_carlo".
    """

    mean: float
    variance: float
    second_moment: float | None
    method: str
    d: int

    @classmethod
    def from_samples(cls, samples, d: int) -> "RegionMoments":
        values = list(samples)
        m = len(values)
        if m < 2:
            raise ValueError("need at least two samples")
        mean = math.fsum(values) / m
        second = math.fsum(v * v for v in values) / m
        return cls(
            mean=mean,
            variance=second - mean * mean,
            second_moment=second,
            method="monte_carlo",
            d=d,
        )


def region_count(successes: int, d: int) -> int:
    """Regions created by a given number of successful cuts: sum C(x, i)."""
    if successes < 0:
        raise ValueError(f"success count must be nonnegative, got {successes}")
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    return sum(math.comb(successes, i) for i in range(d + 1))


def expected_regions(model: CutModel) -> float:
    """E(R) = 1 + sum_{i=1}^{d} C(n, i) p^i, exactly, for any dimension.

    Each i-way intersection of cuts survives with probability p^i and
    contributes one region; the leading 1 is the uncut volume.
    """
    n, p, d = model.n, model.p, model.d
    return 1.0 + math.fsum(math.comb(n, i) * p**i for i in range(1, d + 1))


def second_moment_2d(model: CutModel) -> float:
    """E(R^2) for a disk (d = 2), as an exact polynomial in n and p."""
    if model.d != 2:
        raise UnsupportedDimensionError(
            f"second-moment polynomial covers d = 2 only, got d = {model.d}"
        )
    n, p = model.n, model.p
    return (
        1.0
        + 3.0 * n * p
        + 4.5 * (n * (n - 1)) * p**2
        + 2.0 * (n * (n - 1) * (n - 2)) * p**3
        + 0.25 * (n * (n - 1) * (n - 2) * (n - 3)) * p**4
    )


def variance_closed_form(model: CutModel) -> float:
    """V(R) as an exact polynomial in n and p, for d = 2 and d = 3."""
    n, p = model.n, model.p
    if model.d == 2:
        var = (
            n * p
            + 0.5 * (n * (5 * n - 7)) * p**2
            + (n * (n - 1) * (n - 4)) * p**3
            - 0.5 * (n * (n - 1) * (2 * n - 3)) * p**4
        )
    elif model.d == 3:
        n2 = n * n
        var = (
            n * p
            + 0.5 * (n * (5 * n - 7)) * p**2
            + (n * (n - 1) * (19 * n - 50)) / 6.0 * p**3
            + 0.5 * (n * (n - 1) * (3 * n2 - 19 * n + 25)) * p**4
            + 0.25 * (n * (n - 1) * (n - 2) * (n2 - 11 * n + 20)) * p**5
            - (n * (n - 1) * (n - 2) * (3 * n2 - 15 * n + 20)) / 12.0 * p**6
        )
    else:
        raise UnsupportedDimensionError(
            f"variance polynomial covers d in {{2, 3}}, got d = {model.d}"
        )
    return _guard_variance(var, expected_regions(model))


def variance_asymptotic(model: CutModel) -> float:
    """Leading-order variance: n^3 p^3 (1-p) for d = 2, n^5 p^5 (1-p)/4 for d = 3."""
    n, p = model.n, model.p
    if model.d == 2:
        return n**3 * p**3 * (1.0 - p)
    if model.d == 3:
        return 0.25 * n**5 * p**5 * (1.0 - p)
    raise UnsupportedDimensionError(
        f"asymptotic variance covers d in {{2, 3}}, got d = {model.d}"
    )


def _log_pmf(n: int, p: float, x: int) -> float:
    return (
        math.lgamma(n + 1)
        - math.lgamma(x + 1)
        - math.lgamma(n - x + 1)
        + x * math.log(p)
        + (n - x) * math.log1p(-p)
    )


def _enumerated_moments(n: int, p: float, d: int) -> tuple[float, float]:
    """(E(R), E(R^2)) by summing the full binomial distribution."""
    if p == 0.0 or p == 1.0:
        fixed = region_count(n if p == 1.0 else 0, d)
        return float(fixed), float(fixed) ** 2
    mean_terms = []
    second_terms = []
    for x in range(n + 1):
        weight = math.exp(_log_pmf(n, p, x))
        r = region_count(x, d)
        mean_terms.append(weight * r)
        second_terms.append(weight * r * r)
    return math.fsum(mean_terms), math.fsum(second_terms)


def _check_enumeration_bound(n: int, max_n: int) -> None:
    if n > max_n:
        raise EnumerationBoundError(
            f"enumeration supports n <= {max_n}, got n = {n}"
        )


def variance_exact(model: CutModel, max_n: int = ENUMERATION_BOUND) -> float:
    """V(R) by full enumeration of the success-count distribution."""
    _check_enumeration_bound(model.n, max_n)
    mean, second = _enumerated_moments(model.n, model.p, model.d)
    return _guard_variance(second - mean * mean, mean)


def _guard_variance(var: float, mean: float) -> float:
    # cancellation in m2 - mean^2 may leave a tiny negative residue
    if var < 0.0:
        if var < -1e-9 * mean * mean:
            raise ValueError(f"variance {var!r} is negative beyond rounding noise")
        return 0.0
    return var


def exact_moments_rational(n: int, p: Fraction, d: int) -> tuple[Fraction, Fraction, Fraction]:
    """(E(R), E(R^2), V(R)) in exact rational arithmetic.

    Slow but indisputable; meant for holding the floating-point routes
    to account at small n.
    """
    if not isinstance(p, Fraction):
        raise TypeError("p must be a Fraction for the rational route")
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p!r} outside [0, 1]")
    q = 1 - p
    mean = Fraction(0)
    second = Fraction(0)
    for x in range(n + 1):
        weight = math.comb(n, x) * p**x * q ** (n - x)
        r = region_count(x, d)
        mean += weight * r
        second += weight * r * r
    return mean, second, second - mean * mean


def moments_exact(model: CutModel, max_n: int = ENUMERATION_BOUND) -> RegionMoments:
    """Moments by full enumeration, packaged with their route tag."""
    _check_enumeration_bound(model.n, max_n)
    mean, second = _enumerated_moments(model.n, model.p, model.d)
    return RegionMoments(
        mean=mean,
        variance=_guard_variance(second - mean * mean, mean),
        second_moment=second,
        method="exact_enumeration",
        d=model.d,
    )


def moments_closed_form(model: CutModel) -> RegionMoments:
    """Moments from the explicit polynomials (d = 2 or 3)."""
    mean = expected_regions(model)
    variance = variance_closed_form(model)
    second = second_moment_2d(model) if model.d == 2 else variance + mean * mean
    return RegionMoments(
        mean=mean,
        variance=variance,
        second_moment=second,
        method="closed_form",
        d=model.d,
    )


def moments_asymptotic(model: CutModel) -> RegionMoments:
    """Exact mean with the leading-order variance; no second moment."""
    return RegionMoments(
        mean=expected_regions(model),
        variance=variance_asymptotic(model),
        second_moment=None,
        method="asymptotic",
        d=model.d,
    )


def chebyshev_tail(model: CutModel, lam: float, max_n: int = ENUMERATION_BOUND) -> float:
    """Chebyshev bound on P(|R - E(R)| >= lam), capped at 1.

    Uses the enumerated variance when n is within the enumeration limit
    and the closed form beyond it.
    """
    if lam <= 0.0:
        raise ValueError(f"deviation must be positive, got {lam!r}")
    if model.n <= max_n:
        var = variance_exact(model, max_n)
    else:
        var = variance_closed_form(model)
    return min(1.0, var / (lam * lam))


def concentration_window(model: CutModel) -> tuple[float, float]:
    """Center and scale (E(R), sqrt(V(R))) of the region count, d = 2 only."""
    if model.d != 2:
        raise UnsupportedDimensionError(
            f"concentration window is defined for d = 2 only, got d = {model.d}"
        )
    return expected_regions(model), math.sqrt(variance_closed_form(model))
