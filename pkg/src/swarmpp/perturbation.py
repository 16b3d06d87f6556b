"""Exploration noise: the projection-perturbation-projection composite update
and explorer-role masks for the heterogeneous variant.

Two noise families are supported: Gaussian with per-coordinate standard
deviation sigma, and a scaled Student-t whose scale 0.01*sqrt((df-2)/df) pins
each coordinate's standard deviation to 0.01 regardless of df.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .search_space import Box, project

NOISE_KINDS = ("gaussian", "scaled_t")
ROLE_KINDS = ("all", "first_half", "loser_first_half_pairs")


@dataclass(frozen=True)
class NoiseModel:
    kind: str = "gaussian"
    sigma: float = 0.005
    df: int | None = None

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise ValueError(f"noise kind must be one of {NOISE_KINDS}")
        if self.kind == "gaussian":
            if not (np.isfinite(self.sigma) and self.sigma > 0):
                raise ValueError("gaussian noise needs finite sigma > 0")
        else:
            if self.df is None or self.df <= 2:
                raise ValueError("scaled_t noise needs df > 2 so the variance exists")

    def to_dict(self) -> dict:
        if self.kind == "gaussian":
            return {"kind": "gaussian", "sigma": self.sigma}
        return {"kind": "scaled_t", "df": self.df}

    @classmethod
    def from_dict(cls, d: dict) -> "NoiseModel":
        if d.get("kind") == "scaled_t":
            return cls(kind="scaled_t", df=int(d["df"]))
        return cls(kind="gaussian", sigma=float(d.get("sigma", 0.005)))


@dataclass(frozen=True)
class RolePolicy:
    kind: str = "all"

    def __post_init__(self):
        if self.kind not in ROLE_KINDS:
            raise ValueError(f"role policy must be one of {ROLE_KINDS}")


def sample_noise(model: NoiseModel, d: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Draw iid per-coordinate noise: shape (d,) or (size, d)."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    shape = (d,) if size is None else (size, d)
    if model.kind == "gaussian":
        return rng.normal(0.0, model.sigma, size=shape)
    scale = 0.01 * np.sqrt((model.df - 2) / model.df)
    return scale * rng.standard_t(model.df, size=shape)


def pp_update(candidate, box: Box, model: NoiseModel, rng: np.random.Generator) -> np.ndarray:
    """Clamp the raw update into the box, add one noise draw, clamp again.

    The output is always inside the box, whatever the noise magnitude.
    """
    candidate = np.asarray(candidate, dtype=float)
    inner = project(candidate, box)
    size = None if candidate.ndim == 1 else candidate.shape[0]
    w = sample_noise(model, box.dim, rng, size=size)
    return project(inner + w, box)


def explorer_mask(policy: RolePolicy, n: int) -> np.ndarray:
    """Boolean per-agent mask of which agents receive perturbation.

    first_half marks agents 0..floor(n/2)-1; roles are fixed by index,
    not resampled per iteration.
    """
    if n < 2:
        raise ValueError("need at least two agents")
    mask = np.zeros(n, dtype=bool)
    if policy.kind == "all":
        mask[:] = True
    elif policy.kind == "first_half":
        mask[: n // 2] = True
    else:
        # pairwise policy for CSO; per-agent mask is meaningless there
        raise ValueError("loser_first_half_pairs is resolved per pairing, not per agent")
    return mask
