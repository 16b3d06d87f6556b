"""Pairwise comparison statistics: winning proportion and relative error.

Winning proportion of B over A at a checkpoint is the double average over
functions and runs of the indicator that B's best-so-far beats A's.  Exact
ties count half to each side, which keeps P(B>A) + P(A>B) = 1 even with
floating-point collisions; tie counts are reported so the strict-only figure
is recoverable.

Relative error rescales each algorithm's outputs by the pooled best and range
of both algorithms' runs at a fixed (function, checkpoint), giving a
scale- and shift-free score in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CheckpointMatrix:
    """Best-so-far values for one (algorithm, function): runs x checkpoints."""

    algorithm: str
    function: str
    checkpoints: tuple[int, ...]
    values: np.ndarray  # (R, K)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 2 or vals.shape[1] != len(self.checkpoints):
            raise ValueError("values must be (runs, len(checkpoints))")
        object.__setattr__(self, "values", vals)

    def at(self, t: int) -> np.ndarray:
        return self.values[:, self.checkpoints.index(t)]


def win_fraction(a: np.ndarray, b: np.ndarray) -> tuple[float, int]:
    """Fraction of paired runs where b < a, ties counting 1/2; plus tie count."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("need matched 1-d run vectors")
    if a.size == 0:
        raise ValueError("need at least one run")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("non-finite best-so-far values")
    ties = int(np.sum(a == b))
    wins = float(np.sum(b < a)) + 0.5 * ties
    return wins / a.size, ties


def winning_proportion(A: list[CheckpointMatrix], B: list[CheckpointMatrix], t: int) -> float:
    """P(B beats A at checkpoint t), averaged over runs and functions."""
    if len(A) != len(B) or not A:
        raise ValueError("need matching non-empty collections")
    a_by_f = {m.function: m for m in A}
    b_by_f = {m.function: m for m in B}
    if set(a_by_f) != set(b_by_f):
        raise ValueError("function sets differ between algorithms")
    total, count = 0.0, 0
    for f, ma in a_by_f.items():
        a, b = ma.at(t), b_by_f[f].at(t)
        if a.shape != b.shape:
            raise ValueError(f"run counts differ for function {f}")
        frac, _ = win_fraction(a, b)
        total += frac * a.size
        count += a.size
    return total / count


def relative_error(a: np.ndarray, b: np.ndarray) -> tuple[float, float]:
    """Mean of (value - pooled min) / pooled range for each algorithm.

    Returns (RE_a, RE_b); (0, 0) when all pooled values coincide.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise ValueError("need non-empty run vectors")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("non-finite best-so-far values")
    pooled = np.concatenate([a, b])
    m_star, m_top = pooled.min(), pooled.max()
    spread = m_top - m_star
    if spread == 0.0:
        return 0.0, 0.0
    return float(np.mean((a - m_star) / spread)), float(np.mean((b - m_star) / spread))


def aggregate_relative_error(per_function: list[float]) -> float:
    """Mean relative error over a function collection."""
    if not per_function:
        raise ValueError("need at least one function")
    return float(np.mean(per_function))
