"""Discretized curves on [0,1]: quadrature inner products, sine bases, projections.

Curves live on a shared time grid and all integrals are trapezoid-rule
quadrature on that grid. Everything here is a pure function of immutable
inputs and safe to share across workers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    GridMismatchError,
    InvalidDirectionError,
    InvalidInputError,
    NonFiniteDataError,
)

# p is capped at min(MAX_COMPONENTS, n - 1); beyond that the projection scores
# carry no usable information at the sample sizes this test targets.
MAX_COMPONENTS = 20

UNIT_NORM_TOL = 1e-12


def _sinpi(x: np.ndarray) -> np.ndarray:
    """sin(pi*x) with exact zeros at integer x (argument reduction mod 2)."""
    r = np.mod(np.asarray(x, dtype=float), 2.0)
    out = np.sin(np.pi * r)
    return np.where((r == 0.0) | (r == 1.0), 0.0, out)


@dataclass(frozen=True)
class TimeGrid:
    """Strictly increasing sample points in [0,1], shared by all curves of a run."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 1 or pts.size < 2:
            raise InvalidInputError("time grid needs at least 2 points")
        if not np.all(np.isfinite(pts)):
            raise NonFiniteDataError("time grid contains non-finite points")
        if np.any(np.diff(pts) <= 0):
            raise InvalidInputError("time grid must be strictly increasing")
        if pts[0] < 0.0 or pts[-1] > 1.0:
            raise InvalidInputError("time grid must lie within [0, 1]")

    @classmethod
    def uniform(cls, m: int = 101) -> "TimeGrid":
        return cls(np.linspace(0.0, 1.0, m))

    @property
    def m(self) -> int:
        return self.points.size

    def quad_weights(self) -> np.ndarray:
        """Trapezoid-rule weights; sum equals the grid span."""
        t = self.points
        w = np.empty_like(t)
        w[0] = (t[1] - t[0]) / 2.0
        w[-1] = (t[-1] - t[-2]) / 2.0
        w[1:-1] = (t[2:] - t[:-2]) / 2.0
        return w

    def __eq__(self, other) -> bool:
        return isinstance(other, TimeGrid) and np.array_equal(self.points, other.points)


@dataclass(frozen=True)
class FunctionalSample:
    """n curves sampled row-wise on a common TimeGrid."""

    grid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 2:
            raise InvalidInputError("curve values must be a 2-d array (n x m)")
        object.__setattr__(self, "values", vals)
        if vals.shape[0] < 2:
            raise InvalidInputError("a functional sample needs at least 2 curves")
        if vals.shape[1] != self.grid.m:
            raise GridMismatchError(
                f"curves have {vals.shape[1]} points but grid has {self.grid.m}"
            )
        if not np.all(np.isfinite(vals)):
            raise NonFiniteDataError("curve values contain NaN or infinity")

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class Basis:
    """Orthonormal basis of L2[0,1], indexed from 1."""

    family: str
    eval_fn: Callable[[int, np.ndarray], np.ndarray] = field(repr=False, compare=False)

    def evaluate(self, index: int, t: np.ndarray) -> np.ndarray:
        if index < 1:
            raise InvalidInputError("basis index starts at 1")
        return self.eval_fn(index, np.asarray(t, dtype=float))

    def matrix(self, p: int, grid: TimeGrid) -> np.ndarray:
        """p x m matrix of the first p basis functions at the grid points."""
        return np.vstack([self.evaluate(j, grid.points) for j in range(1, p + 1)])


def _bridge_sine(j: int, t: np.ndarray) -> np.ndarray:
    return np.sqrt(2.0) * _sinpi(j * t)


def _motion_sine(j: int, t: np.ndarray) -> np.ndarray:
    return np.sqrt(2.0) * _sinpi((j - 0.5) * t)


def make_basis(family: str, eval_fn: Callable[[int, np.ndarray], np.ndarray] | None = None) -> Basis:
    """Build a basis by family name: 'bridge_sine', 'motion_sine' or 'custom'.

    bridge_sine: sqrt(2) sin(j pi t) -- eigenfunctions of the Brownian bridge.
    motion_sine: sqrt(2) sin((j - 1/2) pi t) -- eigenfunctions of Brownian motion.
    custom: caller supplies eval_fn(index, t).
    """
    if family == "bridge_sine":
        return Basis("bridge_sine", _bridge_sine)
    if family == "motion_sine":
        return Basis("motion_sine", _motion_sine)
    if family == "custom":
        if eval_fn is None:
            raise InvalidInputError("custom basis requires eval_fn")
        return Basis("custom", eval_fn)
    raise InvalidInputError(f"unknown basis family {family!r}")


def inner_product(f: np.ndarray, g: np.ndarray, grid: TimeGrid) -> float:
    """Trapezoid approximation of the L2[0,1] inner product of two curve rows."""
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if f.shape != (grid.m,) or g.shape != (grid.m,):
        raise GridMismatchError("curve length does not match the time grid")
    return float(np.dot(f * g, grid.quad_weights()))


def gram_matrix(sample: FunctionalSample) -> np.ndarray:
    """Symmetric n x n matrix of pairwise L2 inner products of the curves."""
    weighted = sample.values * sample.grid.quad_weights()
    g = weighted @ sample.values.T
    # averaging with the transpose makes the result bitwise symmetric
    return (g + g.T) / 2.0


def basis_coefficients(sample: FunctionalSample, basis: Basis, p: int) -> np.ndarray:
    """n x p matrix of quadrature inner products of each curve with the first p basis elements."""
    if p < 1:
        raise InvalidInputError("p must be >= 1")
    cap = min(MAX_COMPONENTS, sample.n - 1)
    if p > cap:
        raise InvalidInputError(f"p={p} exceeds the cap min({MAX_COMPONENTS}, n-1)={cap}")
    weighted = sample.values * sample.grid.quad_weights()
    return weighted @ basis.matrix(p, sample.grid).T


def project_scores(
    sample: FunctionalSample,
    basis: Basis,
    gamma: np.ndarray,
    *,
    check_norm: bool = True,
) -> np.ndarray:
    """Scores <X_i, gamma> of every curve against a unit direction in basis coordinates.

    check_norm=False skips the unit-norm validation; used by linearity tests
    that probe the raw (pre-normalization) projection map.
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.ndim != 1 or gamma.size < 1:
        raise InvalidDirectionError("direction must be a 1-d vector")
    if check_norm and abs(np.linalg.norm(gamma) - 1.0) > UNIT_NORM_TOL:
        raise InvalidDirectionError("direction must have unit Euclidean norm")
    coeffs = basis_coefficients(sample, basis, gamma.size)
    return coeffs @ gamma


def center_sample(sample: FunctionalSample) -> FunctionalSample:
    """Subtract the pointwise sample mean curve."""
    centered = sample.values - sample.values.mean(axis=0)
    return FunctionalSample(sample.grid, centered)
