"""Axis-aligned box search domains: clamping, containment and uniform sampling.

The search space is always a nondegenerate hyper-rectangle, so the Euclidean
projection is the componentwise clamp and is unique (no tie-breaking needed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Box:
    """A compact hyper-rectangle given by per-dimension lower/upper bounds."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or upper.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("lower and upper must be 1-d arrays of equal length")
        if lower.size < 1:
            raise ValueError("box must have at least one dimension")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValueError("box bounds must be finite")
        if not np.all(lower < upper):
            raise ValueError("need lower[k] < upper[k] in every dimension")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dim(self) -> int:
        return self.lower.size

    @classmethod
    def cube(cls, lower: float, upper: float, dim: int) -> "Box":
        """A box with the same bounds in every dimension."""
        return cls(np.full(dim, float(lower)), np.full(dim, float(upper)))

    def widths(self) -> np.ndarray:
        return self.upper - self.lower


def _check_point(x, box: Box) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != box.dim:
        raise ValueError(f"point has dimension {x.shape[-1]}, box has {box.dim}")
    if not np.all(np.isfinite(x)):
        raise ValueError("point has non-finite coordinates")
    return x


def project(x, box: Box) -> np.ndarray:
    """Nearest point of the box under Euclidean distance (componentwise clamp).

    Accepts a single point of shape (d,) or a batch of shape (n, d).
    Rejects non-finite coordinates instead of clamping them: a NaN would
    otherwise silently corrupt best-so-far bookkeeping downstream.
    """
    x = _check_point(x, box)
    return np.clip(x, box.lower, box.upper)


def contains(x, box: Box) -> bool:
    """True iff every coordinate lies within the (closed) box."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != box.dim:
        raise ValueError(f"point has dimension {x.shape[-1]}, box has {box.dim}")
    return bool(np.all(x >= box.lower) and np.all(x <= box.upper))


def sample_uniform(box: Box, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Sample uniformly over the box: shape (d,) or (size, d)."""
    if size is None:
        return rng.uniform(box.lower, box.upper)
    return rng.uniform(box.lower, box.upper, size=(size, box.dim))
