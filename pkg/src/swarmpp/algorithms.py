"""Swarm kernels: PSO, BAT, CSO and DE, each in base / perturbed (pp) /
half-perturbed (hpp) variants, with a uniform stepping contract.

Every run owns two independent random generators spawned from its seed: one
for the algorithm's own dynamics and one for the exploration noise.  The base
variant never touches the noise stream, so a perturbed variant with a
degenerate noise scale replays the base trajectory bit for bit.

Random draw order inside each step is part of the contract (golden-trace
tests pin it):

  PSO:  U1 (n,d), U2 (n,d) from dynamics; noise (n,d) for non-base.
  BAT:  frequencies (n,), pulse coins (n,), local-walk eps (n,d),
        loudness coins (n,) from dynamics; noise (n,d) for non-base.
  CSO:  pairing permutation (n,), U1, U2, U3 (n/2, d) in pair order from
        dynamics; noise (n/2, d) for non-base.
  DE:   per agent in index order: donor j (rejection), donor k (rejection),
        forced index, crossover coins (d,) from dynamics; one noise draw (d,)
        per perturbed agent.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace

import numpy as np

from .perturbation import NoiseModel, RolePolicy, explorer_mask, sample_noise
from .search_space import Box

FAMILIES = ("PSO", "BAT", "CSO", "DE")
VARIANTS = ("base", "pp", "hpp")


class RunFailure(RuntimeError):
    """A run produced a non-finite objective value and was aborted."""


@dataclass(frozen=True)
class AlgorithmConfig:
    family: str
    variant: str = "base"
    n: int = 32
    # PSO
    w: float = 0.729
    c1: float = 1.5
    c2: float = 1.5
    # BAT
    q_min: float = 0.0
    q_max: float = 100.0
    pulse_rate: float = 0.5
    loudness: float = 0.5
    local_step_sigma: float = 0.001
    bat_sign: float = 1.0  # +1 follows the printed v + U(x - x*) orientation
    # CSO
    phi: float = 0.0
    # DE
    f_weight: float = 0.8
    crossover: float = 0.9
    noise: NoiseModel = field(default_factory=NoiseModel)
    base_projection: bool = True

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.n < 2:
            raise ValueError("need n >= 2 agents")
        if self.family == "CSO" and self.n % 2 != 0:
            raise ValueError("CSO pairing needs an even swarm size")
        if self.family == "DE" and self.n < 4:
            raise ValueError("DE donor sampling needs n >= 4")

    def role_policy(self) -> RolePolicy:
        if self.variant == "hpp":
            if self.family == "CSO":
                return RolePolicy("loser_first_half_pairs")
            return RolePolicy("first_half")
        return RolePolicy("all")

    def agent_mask(self) -> np.ndarray | None:
        """Per-agent perturbation mask, or None for the base variant."""
        if self.variant == "base":
            return None
        if self.family == "CSO":
            return None  # resolved per pairing inside cso_step
        if self.variant == "pp":
            mask = np.ones(self.n, dtype=bool)
        else:
            mask = explorer_mask(RolePolicy("first_half"), self.n)
        return mask

    def digest(self) -> str:
        payload = {
            "family": self.family,
            "variant": self.variant,
            "n": self.n,
            "w": self.w,
            "c1": self.c1,
            "c2": self.c2,
            "q_min": self.q_min,
            "q_max": self.q_max,
            "pulse_rate": self.pulse_rate,
            "loudness": self.loudness,
            "local_step_sigma": self.local_step_sigma,
            "bat_sign": self.bat_sign,
            "phi": self.phi,
            "f_weight": self.f_weight,
            "crossover": self.crossover,
            "noise": self.noise.to_dict(),
            "base_projection": self.base_projection,
        }
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


# label <-> (family, variant): PSO, mPSO, hmPSO, ...
def config_for_label(label: str, **overrides) -> AlgorithmConfig:
    variant = "base"
    fam = label
    if label.startswith("hm"):
        variant, fam = "hpp", label[2:]
    elif label.startswith("m"):
        variant, fam = "pp", label[1:]
    if fam not in FAMILIES:
        raise ValueError(f"unknown algorithm label {label!r}")
    return AlgorithmConfig(family=fam, variant=variant, **overrides)


ALGORITHM_LABELS = tuple(
    prefix + fam for fam in FAMILIES for prefix in ("", "m", "hm")
)


@dataclass
class SwarmState:
    """Mutable per-run state; owned by exactly one run."""

    X: np.ndarray  # (n, d) positions
    fvals: np.ndarray  # (n,) objective values of X
    V: np.ndarray | None  # (n, d) velocities (PSO/BAT/CSO)
    pbest_X: np.ndarray | None  # PSO personal bests
    pbest_f: np.ndarray | None
    gbest_x: np.ndarray  # the in-dynamics global memory agent
    gbest_f: float
    best_x: np.ndarray  # monotone best-so-far memory (reporting)
    best_f: float
    iteration: int = 0
    n_evals: int = 0


@dataclass
class RunRecord:
    seed: int
    config_digest: str
    checkpoints: dict[int, float]
    final_best_point: np.ndarray | None
    final_best_value: float
    violations_c1: int = 0
    violations_c3: int = 0
    n_evals: int = 0
    status: str = "ok"

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "config_digest": self.config_digest,
            "checkpoints": {str(t): v for t, v in self.checkpoints.items()},
            "final_best_point": None
            if self.final_best_point is None
            else [float(v) for v in self.final_best_point],
            "final_best_value": self.final_best_value,
            "violations_c1": self.violations_c1,
            "violations_c3": self.violations_c3,
            "n_evals": self.n_evals,
            "status": self.status,
        }


def init_state(config: AlgorithmConfig, box: Box, fbatch, rng: np.random.Generator) -> SwarmState:
    """Uniform initial positions, zero velocities, memory seeded from the swarm."""
    n = config.n
    X = rng.uniform(box.lower, box.upper, size=(n, box.dim))
    fvals = np.asarray(fbatch(X), dtype=float)
    if not np.all(np.isfinite(fvals)):
        raise RunFailure("non-finite objective value during initialization")
    j = int(np.argmin(fvals))
    V = None if config.family == "DE" else np.zeros_like(X)
    pbest_X = X.copy() if config.family == "PSO" else None
    pbest_f = fvals.copy() if config.family == "PSO" else None
    return SwarmState(
        X=X,
        fvals=fvals,
        V=V,
        pbest_X=pbest_X,
        pbest_f=pbest_f,
        gbest_x=X[j].copy(),
        gbest_f=float(fvals[j]),
        best_x=X[j].copy(),
        best_f=float(fvals[j]),
        n_evals=n,
    )


def _clip(X, box: Box) -> np.ndarray:
    return np.clip(X, box.lower, box.upper)


def pso_step(state: SwarmState, config: AlgorithmConfig, box: Box, fbatch, rng, rng_noise) -> SwarmState:
    n, d = state.X.shape
    U1 = rng.random((n, d))
    U2 = rng.random((n, d))
    state.V = (
        config.w * state.V
        + config.c1 * U1 * (state.pbest_X - state.X)
        + config.c2 * U2 * (state.gbest_x - state.X)
    )
    raw = state.X + state.V
    inner = _clip(raw, box) if (config.base_projection or config.variant != "base") else raw
    if config.variant == "base":
        X_new = inner
    else:
        mask = config.agent_mask()
        w = sample_noise(config.noise, d, rng_noise, size=n)
        X_new = np.where(mask[:, None], _clip(inner + w, box), inner)
    f_new = np.asarray(fbatch(X_new), dtype=float)
    if not np.all(np.isfinite(f_new)):
        raise RunFailure("non-finite objective value in pso_step")
    state.X = X_new
    state.fvals = f_new
    state.n_evals += n

    improved = f_new < state.pbest_f
    state.pbest_X = np.where(improved[:, None], X_new, state.pbest_X)
    state.pbest_f = np.where(improved, f_new, state.pbest_f)
    j = int(np.argmin(state.pbest_f))
    # condition H: strict improvement of the best personal-best value
    if state.pbest_f[j] < state.gbest_f:
        state.gbest_x = state.pbest_X[j].copy()
        state.gbest_f = float(state.pbest_f[j])
    if state.gbest_f < state.best_f:
        state.best_f = state.gbest_f
        state.best_x = state.gbest_x.copy()
    state.iteration += 1
    return state


def bat_step(state: SwarmState, config: AlgorithmConfig, box: Box, fbatch, rng, rng_noise) -> SwarmState:
    n, d = state.X.shape
    freq = rng.uniform(config.q_min, config.q_max, size=n)
    state.V = state.V + config.bat_sign * freq[:, None] * (state.X - state.gbest_x)
    pulse = rng.random(n)
    eps = rng.normal(0.0, config.local_step_sigma, size=(n, d))
    cand = np.where(
        (pulse < config.pulse_rate)[:, None],
        state.X + state.V,
        state.gbest_x + eps,
    )
    if config.variant == "base":
        y = _clip(cand, box) if config.base_projection else cand
    else:
        # PP applied to the step-2 candidate; the loudness revert below
        # postdates the perturbation.
        mask = config.agent_mask()
        w = sample_noise(config.noise, d, rng_noise, size=n)
        inner = _clip(cand, box)
        y = np.where(mask[:, None], _clip(inner + w, box), inner)
    f_y = np.asarray(fbatch(y), dtype=float)
    if not np.all(np.isfinite(f_y)):
        raise RunFailure("non-finite objective value in bat_step")
    state.n_evals += n

    loud = rng.random(n)
    # positions are kept inside the box every step, so chi(x_i(t)) = x_i(t)
    # and its value is the cached one
    revert = (loud < config.loudness) | (state.fvals < f_y)
    X_new = np.where(revert[:, None], state.X, y)
    f_new = np.where(revert, state.fvals, f_y)

    state.X = X_new
    state.fvals = f_new
    j = int(np.argmin(f_new))
    # printed step 4: x* tracks the current argmin (not monotone by itself)
    state.gbest_x = X_new[j].copy()
    state.gbest_f = float(f_new[j])
    if state.gbest_f < state.best_f:
        state.best_f = state.gbest_f
        state.best_x = state.gbest_x.copy()
    state.iteration += 1
    return state


def cso_step(state: SwarmState, config: AlgorithmConfig, box: Box, fbatch, rng, rng_noise) -> SwarmState:
    n, d = state.X.shape
    perm = rng.permutation(n)
    first, second = perm[0::2], perm[1::2]
    npairs = n // 2
    first_wins = state.fvals[first] < state.fvals[second]
    winners = np.where(first_wins, first, second)
    losers = np.where(first_wins, second, first)

    U1 = rng.random((npairs, d))
    U2 = rng.random((npairs, d))
    U3 = rng.random((npairs, d))
    Vl = U1 * state.V[losers] + U2 * (state.X[winners] - state.X[losers])
    if config.phi != 0.0:
        xbar = state.X.mean(axis=0)
        Vl = Vl + config.phi * U3 * (xbar - state.X[losers])
    raw = state.X[losers] + Vl
    inner = _clip(raw, box) if (config.base_projection or config.variant != "base") else raw
    if config.variant == "base":
        Xl = inner
    else:
        w = sample_noise(config.noise, d, rng_noise, size=npairs)
        if config.variant == "pp":
            pair_mask = np.ones(npairs, dtype=bool)
        else:
            pair_mask = np.zeros(npairs, dtype=bool)
            pair_mask[: n // 4] = True  # losers in the first half of pairs
        Xl = np.where(pair_mask[:, None], _clip(inner + w, box), inner)
    f_l = np.asarray(fbatch(Xl), dtype=float)
    if not np.all(np.isfinite(f_l)):
        raise RunFailure("non-finite objective value in cso_step")
    state.n_evals += npairs

    state.X[losers] = Xl
    state.V[losers] = Vl
    state.fvals[losers] = f_l
    j = int(np.argmin(state.fvals))
    state.gbest_x = state.X[j].copy()
    state.gbest_f = float(state.fvals[j])
    if state.gbest_f < state.best_f:
        state.best_f = state.gbest_f
        state.best_x = state.gbest_x.copy()
    state.iteration += 1
    return state


def de_step(state: SwarmState, config: AlgorithmConfig, box: Box, fbatch, rng, rng_noise) -> SwarmState:
    n, d = state.X.shape
    Xold = state.X.copy()
    fold = state.fvals.copy()
    mask = config.agent_mask()
    for i in range(n):
        j = int(rng.integers(n))
        while j == i:
            j = int(rng.integers(n))
        k = int(rng.integers(n))
        while k == i or k == j:
            k = int(rng.integers(n))
        y = Xold[i] + config.f_weight * (Xold[j] - Xold[k])
        forced = int(rng.integers(d))
        coins = rng.random(d)
        keep = coins < config.crossover
        keep[forced] = True
        y = np.where(keep, y, Xold[i])
        if mask is not None and mask[i]:
            w = sample_noise(config.noise, d, rng_noise)
            cand = _clip(_clip(y, box) + w, box)
        else:
            cand = _clip(y, box) if config.base_projection else y
        f_cand = float(fbatch(cand))
        if not np.isfinite(f_cand):
            raise RunFailure("non-finite objective value in de_step")
        state.n_evals += 1
        if f_cand < fold[i]:
            state.X[i] = cand
            state.fvals[i] = f_cand
    j = int(np.argmin(state.fvals))
    state.gbest_x = state.X[j].copy()
    state.gbest_f = float(state.fvals[j])
    if state.gbest_f < state.best_f:
        state.best_f = state.gbest_f
        state.best_x = state.gbest_x.copy()
    state.iteration += 1
    return state


_STEPPERS = {"PSO": pso_step, "BAT": bat_step, "CSO": cso_step, "DE": de_step}


def step(state: SwarmState, config: AlgorithmConfig, box: Box, fbatch, rng, rng_noise) -> SwarmState:
    return _STEPPERS[config.family](state, config, box, fbatch, rng, rng_noise)


def _check_invariants(state: SwarmState, box: Box, prev_best: float, record: RunRecord):
    inside = np.all(state.X >= box.lower) and np.all(state.X <= box.upper)
    if state.pbest_X is not None:
        inside = inside and np.all(state.pbest_X >= box.lower) and np.all(state.pbest_X <= box.upper)
    inside = inside and np.all(state.gbest_x >= box.lower) and np.all(state.gbest_x <= box.upper)
    if not inside:
        record.violations_c1 += 1
    if state.best_f > prev_best:
        record.violations_c3 += 1


def run(
    config: AlgorithmConfig,
    fbatch,
    box: Box,
    seed: int,
    max_iter: int,
    checkpoints,
    check_invariants: bool = True,
) -> RunRecord:
    """Run one seeded trajectory and record best-so-far at each checkpoint.

    fbatch maps an (n, d) population to an (n,) value array (see
    objectives.batch_evaluator).  Deterministic given (config, seed).
    """
    checkpoints = [int(t) for t in checkpoints]
    if sorted(checkpoints) != checkpoints:
        raise ValueError("checkpoints must be sorted")
    if checkpoints and checkpoints[-1] > max_iter:
        raise ValueError("checkpoints must not exceed max_iter")
    ss = np.random.SeedSequence(seed)
    dyn_ss, noise_ss = ss.spawn(2)
    rng = np.random.default_rng(dyn_ss)
    rng_noise = np.random.default_rng(noise_ss)

    record = RunRecord(
        seed=seed,
        config_digest=config.digest(),
        checkpoints={},
        final_best_point=None,
        final_best_value=np.inf,
    )
    state = init_state(config, box, fbatch, rng)
    cpset = set(checkpoints)
    if 0 in cpset:
        record.checkpoints[0] = state.best_f
    for t in range(1, max_iter + 1):
        prev_best = state.best_f
        step(state, config, box, fbatch, rng, rng_noise)
        if check_invariants:
            _check_invariants(state, box, prev_best, record)
        if t in cpset:
            record.checkpoints[t] = state.best_f
    record.final_best_point = state.best_x.copy()
    record.final_best_value = state.best_f
    record.n_evals = state.n_evals
    return record
