"""Rank/nearest-neighbor smoothed quadratic form and its standardization.

Projection scores enter only through their integer ranks (empirical d.f.
values i/n with ties broken by original index), so the statistic is invariant
under strictly monotone transforms of the scores. Kernel weights are computed
from absolute integer rank differences, which makes the direction-reversal
identity hold bitwise, not just to rounding.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    DegenerateVarianceError,
    InvalidBandwidthError,
    InvalidInputError,
)


def epanechnikov(x: np.ndarray) -> np.ndarray:
    """(1 - x^2) on [-1, 1], zero outside; unnormalized, integral 4/3.

    The standardized statistic is invariant to kernel scaling, so the missing
    3/4 factor is unobservable downstream.
    """
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) <= 1.0, 1.0 - x * x, 0.0)


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family plus bandwidth on the rank scale."""

    bandwidth: float
    family: str = "epanechnikov"
    custom_fn: Callable[[np.ndarray], np.ndarray] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        if not np.isfinite(self.bandwidth) or self.bandwidth <= 0.0:
            raise InvalidBandwidthError("bandwidth must be a positive real")
        if self.family == "custom" and self.custom_fn is None:
            raise InvalidInputError("custom kernel requires custom_fn")
        if self.family not in ("epanechnikov", "custom"):
            raise InvalidInputError(f"unknown kernel family {self.family!r}")

    def evaluate(self, u) -> np.ndarray | float:
        """K(u / h), the bandwidth-scaled kernel weight."""
        u = np.asarray(u, dtype=float)
        fn = epanechnikov if self.family == "epanechnikov" else self.custom_fn
        out = fn(u / self.bandwidth)
        return float(out) if out.ndim == 0 else out


def kernel_eval(spec: KernelSpec, u) -> float:
    """Scalar convenience wrapper for KernelSpec.evaluate."""
    return float(spec.evaluate(u))


@dataclass(frozen=True)
class RankVector:
    """Empirical d.f. values of the scores, stored as integer ranks 1..n."""

    integer_ranks: np.ndarray

    def __post_init__(self):
        ints = np.asarray(self.integer_ranks, dtype=np.int64)
        object.__setattr__(self, "integer_ranks", ints)
        n = ints.size
        if n < 2:
            raise InvalidInputError("need at least 2 observations to rank")
        if not np.array_equal(np.sort(ints), np.arange(1, n + 1)):
            raise InvalidInputError("integer ranks must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return self.integer_ranks.size

    @property
    def ranks(self) -> np.ndarray:
        """The values i/n, a permutation of {1/n, ..., n/n}."""
        return self.integer_ranks / self.n


def rank_transform(scores: np.ndarray) -> RankVector:
    """Empirical d.f. ranks of the scores; ties broken by original index."""
    scores = np.asarray(scores, dtype=float)
    if scores.ndim != 1 or scores.size < 2:
        raise InvalidInputError("scores must be a 1-d vector of length >= 2")
    if not np.all(np.isfinite(scores)):
        raise InvalidInputError("scores contain non-finite values")
    # stable sort orders equal scores by index, which is exactly the tie rule
    order = np.argsort(scores, kind="stable")
    ints = np.empty(scores.size, dtype=np.int64)
    ints[order] = np.arange(1, scores.size + 1)
    return RankVector(ints)


def kernel_profile(n: int, spec: KernelSpec) -> np.ndarray:
    """K(d / (n h)) for integer rank gaps d = 0..n-1.

    Rank differences only take these n values, so every kernel weight matrix
    is a gather from this table.
    """
    return np.asarray(spec.evaluate(np.arange(n) / n), dtype=float)


def weight_matrix(ranks: RankVector, spec: KernelSpec) -> np.ndarray:
    """n x n kernel weights K((r_i - r_j)/h) with zero diagonal.

    Depends only on the covariate side (ranks) and the bandwidth; across wild
    bootstrap replicates it is reused unchanged while the Gram matrix is
    reweighted.
    """
    profile = kernel_profile(ranks.n, spec)
    gaps = np.abs(ranks.integer_ranks[:, None] - ranks.integer_ranks[None, :])
    w = profile[gaps]
    np.fill_diagonal(w, 0.0)
    return w


def _check_gram(gram: np.ndarray, ranks: RankVector) -> np.ndarray:
    gram = np.asarray(gram, dtype=float)
    n = ranks.n
    if gram.shape != (n, n):
        raise InvalidInputError(f"gram matrix must be {n} x {n}")
    return gram


def quadratic_form(gram: np.ndarray, ranks: RankVector, spec: KernelSpec) -> float:
    """Kernel-weighted mean of off-diagonal response inner products.

    (1/(n(n-1))) sum_{i != j} G[i,j] (1/h) K((r_i - r_j)/h); zero in
    expectation when the covariate carries no information about the response.
    """
    gram = _check_gram(gram, ranks)
    n = ranks.n
    w = weight_matrix(ranks, spec)
    return float((gram * w).sum() / (n * (n - 1) * spec.bandwidth))


def variance_estimate(gram: np.ndarray, ranks: RankVector, spec: KernelSpec) -> float:
    """Variance estimate of the scaled quadratic form; positive or an error.

    (2/(n(n-1)h)) sum_{i != j} G[i,j]^2 K^2((r_i - r_j)/h). A zero value means
    every kernel-weighted pair vanished and the standardized statistic is
    undefined there.
    """
    gram = _check_gram(gram, ranks)
    n = ranks.n
    w = weight_matrix(ranks, spec)
    v = float(2.0 * ((gram * w) ** 2).sum() / (n * (n - 1) * spec.bandwidth))
    if v <= 0.0:
        raise DegenerateVarianceError(
            "all kernel-weighted response pairs vanish; statistic undefined"
        )
    return v


@dataclass(frozen=True)
class DirectionStatistics:
    """Raw quadratic form, its variance estimate, and the standardized ratio."""

    quad_form: float
    variance: float
    standardized: float


def standardized_statistic(
    gram: np.ndarray, ranks: RankVector, spec: KernelSpec
) -> DirectionStatistics:
    """n sqrt(h) Q / sqrt(V), the asymptotically standard-normal statistic."""
    q = quadratic_form(gram, ranks, spec)
    v = variance_estimate(gram, ranks, spec)
    n = ranks.n
    return DirectionStatistics(q, v, n * np.sqrt(spec.bandwidth) * q / np.sqrt(v))
