"""Normal-limit diagnostics for the region count of random maximal cuts.

Writing the d = 2 region count as R = 1 + X + sum_{i<j} I_i I_j exposes
a sum of n^2 + 1 indicator-style summands whose dependency graph is
sparse: each product I_i I_j shares an index with fewer than 4n others.
Stein's method in Rinott's form then bounds the distance to normality
by three terms built from the graph size N, the degree bound D, the
summand bound B, and the exact standard deviation sigma.  The universal
constant in front is unknown, so the terms are reported raw, never as
an absolute bound.

The empirical side draws region-count samples from exact binomial
inversion on a counter-based stream and measures the Kolmogorov-Smirnov
distance between the exactly standardized samples and the standard
normal CDF.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln, ndtr

from maxdiv.moments import CutModel, expected_regions, variance_closed_form


@dataclass(frozen=True)
class RinottTerms:
    """The three Stein/Rinott error terms for the d = 2 region count.

    Attributes:
        term1: N * D^2 * B^3 / sigma^3.
        term2: sqrt(N * D^3 * B^4) / sigma^2.
        term3: D * B / sigma.
        n_summands: N = n^2 + 1.
        max_degree: D = 4n, the dependency-graph degree bound.
        summand_bound: B = 1.
        sigma: exact standard deviation of the region count.
    """

    term1: float
    term2: float
    term3: float
    n_summands: int
    max_degree: int
    summand_bound: float
    sigma: float

    @property
    def max_term(self) -> float:
        """The reported bound; no universal constant is applied."""
        return max(self.term1, self.term2, self.term3)


class ThresholdCheck(NamedTuple):
    in_clt_regime: bool
    margin: float


@dataclass(frozen=True)
class NormalitySample:
    """Result of one empirical normality experiment."""

    n: int
    p: float
    sample_count: int
    seed: int | None
    ks_distance: float
    mean: float
    sigma: float


def _require_nondegenerate(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability {p!r} is degenerate (sigma = 0 at p = 0 or 1)")


def rinott_terms(n: int, p: float) -> RinottTerms:
    """Stein/Rinott error terms for n cuts kept with probability p.

    All three decay like n^{-1/2} at fixed p; the first dominates for
    p <= 1/2.
    """
    if n < 2:
        raise ValueError(f"need at least two cuts, got {n}")
    _require_nondegenerate(p)
    sigma = math.sqrt(variance_closed_form(CutModel(n, p, 2)))
    n_summands = n * n + 1
    max_degree = 4 * n
    bound = 1.0
    return RinottTerms(
        term1=n_summands * max_degree**2 * bound**3 / sigma**3,
        term2=math.sqrt(n_summands * max_degree**3 * bound**4) / sigma**2,
        term3=max_degree * bound / sigma,
        n_summands=n_summands,
        max_degree=max_degree,
        summand_bound=bound,
        sigma=sigma,
    )


def threshold_check(n: int, p: float) -> ThresholdCheck:
    """Margin p(1-p)^{1/3} n^{1/9} deciding the CLT regime.

    Normality kicks in when the margin is large against 1; the boolean
    is the blunt margin > 1 reading of that condition.
    """
    if n < 1:
        raise ValueError(f"cut count must be positive, got {n}")
    _require_nondegenerate(p)
    margin = p * (1.0 - p) ** (1.0 / 3.0) * n ** (1.0 / 9.0)
    return ThresholdCheck(in_clt_regime=margin > 1.0, margin=margin)


def _binomial_cdf(n: int, p: float) -> np.ndarray:
    """CDF of Bin(n, p) on 0..n, stable for large n via log-space pmf."""
    x = np.arange(n + 1)
    log_pmf = (
        gammaln(n + 1)
        - gammaln(x + 1)
        - gammaln(n - x + 1)
        + x * math.log(p)
        + (n - x) * math.log1p(-p)
    )
    cdf = np.cumsum(np.exp(log_pmf))
    return cdf / cdf[-1]


def sample_region_counts(n: int, p: float, m: int, seed: int) -> np.ndarray:
    """Draw m region counts for n cuts kept with probability p.

    Sample i is a pure function of (n, p, seed, i): uniform number i of
    a counter-based stream keyed by the seed feeds an inverse-CDF
    binomial draw, which then maps through the d = 2 region count.  Any
    partition of the index range therefore reproduces the same values,
    which is what makes parallel execution harmless.
    """
    if n < 1:
        raise ValueError(f"cut count must be positive, got {n}")
    if m < 1:
        raise ValueError(f"sample count must be positive, got {m}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p!r} outside [0, 1]")
    if p == 0.0:
        return np.ones(m, dtype=np.int64)
    if p == 1.0:
        return np.full(m, 1 + n + n * (n - 1) // 2, dtype=np.int64)
    stream = np.random.Generator(np.random.Philox(key=seed & (2**128 - 1)))
    uniforms = stream.random(m)
    cdf = _binomial_cdf(n, p)
    x = np.searchsorted(cdf, uniforms, side="left").clip(max=n).astype(np.int64)
    return 1 + x + x * (x - 1) // 2


def ks_distance(samples, n: int, p: float, seed: int | None = None) -> NormalitySample:
    """Kolmogorov-Smirnov distance of exactly standardized samples to normal.

    Standardization uses the exact mean and standard deviation of the
    region count, never sample estimates.  The sup is taken over both
    one-sided gaps at every jump of the empirical CDF, which is exact
    for step functions.

    Args:
        samples: region counts, as from ``sample_region_counts``.
        n, p: the model that produced them.
        seed: recorded for provenance only; samples carry no seed.
    """
    _require_nondegenerate(p)
    values = np.asarray(samples, dtype=np.float64)
    if values.size == 0:
        raise ValueError("need at least one sample")
    model = CutModel(n, p, 2)
    mean = expected_regions(model)
    sigma = math.sqrt(variance_closed_form(model))
    z = np.sort((values - mean) / sigma)
    phi = ndtr(z)
    m = values.size
    steps = np.arange(1, m + 1) / m
    upper = float(np.max(steps - phi))
    lower = float(np.max(phi - (steps - 1.0 / m)))
    return NormalitySample(
        n=n,
        p=p,
        sample_count=m,
        seed=seed,
        ks_distance=max(upper, lower),
        mean=mean,
        sigma=sigma,
    )
