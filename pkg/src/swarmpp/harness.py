"""Experiment orchestration: seed derivation, the full benchmark protocol,
result persistence and metric computation.

A plan fully determines every stored number: each (algorithm, function,
dimension, run) cell derives its own 64-bit seed from the master seed, so
runs are independent of execution order and parallelism degree.

Store layout: <outdir>/manifest.json, <outdir>/runs.jsonl, <outdir>/metrics.csv.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import algorithms, metrics, objectives
from .algorithms import ALGORITHM_LABELS, RunFailure, config_for_label
from .perturbation import NoiseModel

DEFAULT_CHECKPOINTS = (50, 100, 200, 400, 1000, 3000, 10000)

METRICS_HEADER = "experiment,pair,function,dimension,checkpoint,metric,value,tie_count"


def derive_seed(master: int, algorithm: str, function: str, dimension: int, run: int) -> int:
    """Stable 64-bit seed for one run cell; a pure function of the tuple."""
    key = f"{master}|{algorithm}|{function}|{dimension}|{run}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "little")


@dataclass(frozen=True)
class ExperimentPlan:
    name: str = "experiment"
    algorithms: tuple[str, ...] = ("PSO", "mPSO", "hmPSO")
    pairs: tuple[tuple[str, str], ...] = (("PSO", "mPSO"), ("PSO", "hmPSO"))
    dimensions: tuple[int, ...] = objectives.COLLECTION_DIMS
    functions: tuple[str, ...] | None = None  # optional label subset
    runs: int = 100
    max_iter: int = 10_000
    checkpoints: tuple[int, ...] = DEFAULT_CHECKPOINTS
    master_seed: int = 0
    noise: NoiseModel = field(default_factory=NoiseModel)
    n: int = 32
    parallelism: int = 1

    def __post_init__(self):
        for label in self.algorithms:
            if label not in ALGORITHM_LABELS:
                raise ValueError(f"unknown algorithm label {label!r}")
        for a, b in self.pairs:
            if a not in self.algorithms or b not in self.algorithms:
                raise ValueError(f"pair ({a}, {b}) references an algorithm not in the plan")
        for d in self.dimensions:
            if d not in objectives.COLLECTION_DIMS:
                raise ValueError(f"dimension {d} not in {objectives.COLLECTION_DIMS}")
        if self.runs < 1 or self.max_iter < 0 or self.n < 2:
            raise ValueError("invalid runs / max_iter / n")
        if list(self.checkpoints) != sorted(self.checkpoints):
            raise ValueError("checkpoints must be sorted")
        if self.checkpoints and self.checkpoints[-1] > self.max_iter:
            raise ValueError("checkpoints must not exceed max_iter")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "algorithms": list(self.algorithms),
            "pairs": [list(p) for p in self.pairs],
            "dimensions": list(self.dimensions),
            "functions": None if self.functions is None else list(self.functions),
            "runs": self.runs,
            "max_iter": self.max_iter,
            "checkpoints": list(self.checkpoints),
            "master_seed": self.master_seed,
            "noise": self.noise.to_dict(),
            "n": self.n,
            "parallelism": self.parallelism,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentPlan":
        kwargs = {}
        for key in ("name", "runs", "max_iter", "master_seed", "n", "parallelism"):
            if key in d:
                kwargs[key] = d[key]
        if "algorithms" in d:
            kwargs["algorithms"] = tuple(d["algorithms"])
        if "pairs" in d:
            kwargs["pairs"] = tuple(tuple(p) for p in d["pairs"])
        if "dimensions" in d:
            kwargs["dimensions"] = tuple(d["dimensions"])
        if d.get("functions") is not None:
            kwargs["functions"] = tuple(d["functions"])
        if "checkpoints" in d:
            kwargs["checkpoints"] = tuple(d["checkpoints"])
        if "noise" in d:
            kwargs["noise"] = NoiseModel.from_dict(d["noise"])
        return cls(**kwargs)

    @classmethod
    def from_json_file(cls, path) -> "ExperimentPlan":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def digest(self) -> str:
        # parallelism is an execution detail, not part of the result identity
        payload = self.to_dict()
        payload.pop("parallelism")
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def collection(self) -> list[tuple[objectives.ObjectiveSpec, int]]:
        members = []
        for d in self.dimensions:
            for spec, dd in objectives.list_collection(d):
                if self.functions is None or spec.label in self.functions:
                    members.append((spec, dd))
        return members

    def cells(self) -> list[tuple[str, str, int, int]]:
        """All (algorithm, function, dimension, run) work items, in storage order."""
        out = []
        for alg in self.algorithms:
            for spec, d in self.collection():
                for r in range(self.runs):
                    out.append((alg, spec.label, d, r))
        return out


def _run_cell(args) -> tuple[tuple, dict]:
    alg, label, d, r, plan_dict = args
    plan = ExperimentPlan.from_dict(plan_dict)
    spec = objectives.get(label)
    box = objectives.default_domain(spec, d)
    fbatch = objectives.batch_evaluator(spec, d)
    config = config_for_label(alg, n=plan.n, noise=plan.noise)
    seed = derive_seed(plan.master_seed, alg, label, d, r)
    try:
        rec = algorithms.run(config, fbatch, box, seed, plan.max_iter, plan.checkpoints)
        payload = rec.to_dict()
    except RunFailure as exc:
        payload = {
            "seed": seed,
            "config_digest": config.digest(),
            "checkpoints": {},
            "final_best_point": None,
            "final_best_value": None,
            "violations_c1": 0,
            "violations_c3": 0,
            "n_evals": 0,
            "status": f"failed: {exc}",
        }
    payload.update({"algorithm": alg, "function": label, "dimension": d, "run": r})
    return (alg, label, d, r), payload


class ResultStore:
    """Append-only run records plus a manifest and derived metrics, on disk."""

    def __init__(self, outdir):
        self.outdir = Path(outdir)
        self.manifest_path = self.outdir / "manifest.json"
        self.runs_path = self.outdir / "runs.jsonl"
        self.metrics_path = self.outdir / "metrics.csv"

    def exists(self) -> bool:
        return self.manifest_path.exists()

    def write_manifest(self, plan: ExperimentPlan):
        self.outdir.mkdir(parents=True, exist_ok=True)
        manifest = {"plan": plan.to_dict(), "digest": plan.digest(), "format": 1}
        self.manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")

    def read_manifest(self) -> dict:
        return json.loads(self.manifest_path.read_text())

    def write_runs(self, records: dict[tuple, dict]):
        lines = []
        for key in sorted(records):
            lines.append(json.dumps(records[key], sort_keys=True))
        self.runs_path.write_text("\n".join(lines) + ("\n" if lines else ""))

    def read_runs(self) -> dict[tuple, dict]:
        records = {}
        if not self.runs_path.exists():
            return records
        for line in self.runs_path.read_text().splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            key = (rec["algorithm"], rec["function"], rec["dimension"], rec["run"])
            records[key] = rec
        return records

    def write_metrics(self, rows: list[tuple]):
        lines = [METRICS_HEADER]
        for row in rows:
            lines.append(",".join(str(v) for v in row))
        self.metrics_path.write_text("\n".join(lines) + "\n")


def _valid_pair_values(records, plan, a, b, label, d, t):
    """Matched run vectors for a pair, excluding runs failed on either side."""
    a_vals, b_vals, excluded = [], [], 0
    for r in range(plan.runs):
        ra = records.get((a, label, d, r))
        rb = records.get((b, label, d, r))
        if ra is None or rb is None:
            raise KeyError(f"missing run record for {label} d={d} run={r}")
        if ra["status"] != "ok" or rb["status"] != "ok":
            excluded += 1
            continue
        a_vals.append(ra["checkpoints"][str(t)])
        b_vals.append(rb["checkpoints"][str(t)])
    if excluded:
        warnings.warn(
            f"excluded {excluded} failed run pair(s) for {a}/{b} on {label} d={d}"
        )
    return np.asarray(a_vals), np.asarray(b_vals)


def compute_metric_rows(plan: ExperimentPlan, records: dict[tuple, dict]) -> list[tuple]:
    """Long-format metric rows for every pair, function, dimension, checkpoint.

    Per-function rows carry the win fraction and both relative errors;
    function "ALL" rows carry the dimension-level aggregates.
    """
    rows = []
    members = plan.collection()
    for a, b in plan.pairs:
        pair = f"{a}:{b}"
        for d in plan.dimensions:
            labels = [spec.label for spec, dd in members if dd == d]
            if not labels:
                continue
            for t in plan.checkpoints:
                win_total, count_total, ties_total = 0.0, 0, 0
                re_a_list, re_b_list = [], []
                for label in labels:
                    av, bv = _valid_pair_values(records, plan, a, b, label, d, t)
                    if av.size == 0:
                        continue
                    frac, ties = metrics.win_fraction(av, bv)
                    re_a, re_b = metrics.relative_error(av, bv)
                    rows.append((plan.name, pair, label, d, t, "winning_proportion", repr(frac), ties))
                    rows.append((plan.name, pair, label, d, t, "relative_error_orig", repr(re_a), ties))
                    rows.append((plan.name, pair, label, d, t, "relative_error_mod", repr(re_b), ties))
                    win_total += frac * av.size
                    count_total += av.size
                    ties_total += ties
                    re_a_list.append(re_a)
                    re_b_list.append(re_b)
                if count_total:
                    p = win_total / count_total
                    rows.append((plan.name, pair, "ALL", d, t, "winning_proportion", repr(p), ties_total))
                    rows.append((plan.name, pair, "ALL", d, t, "relative_error_orig",
                                 repr(metrics.aggregate_relative_error(re_a_list)), ties_total))
                    rows.append((plan.name, pair, "ALL", d, t, "relative_error_mod",
                                 repr(metrics.aggregate_relative_error(re_b_list)), ties_total))
    return rows


def _execute_cells(plan: ExperimentPlan, cells) -> dict[tuple, dict]:
    jobs = [(alg, label, d, r, plan.to_dict()) for alg, label, d, r in cells]
    records: dict[tuple, dict] = {}
    if plan.parallelism <= 1 or len(jobs) < 2:
        for job in jobs:
            key, rec = _run_cell(job)
            records[key] = rec
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=plan.parallelism) as pool:
            for key, rec in pool.map(_run_cell, jobs, chunksize=4):
                records[key] = rec
    return records


def execute(plan: ExperimentPlan, outdir, progress=None) -> list[tuple]:
    """Run the full plan, persist everything, return the metric rows."""
    store = ResultStore(outdir)
    store.write_manifest(plan)
    records = _execute_cells(plan, plan.cells())
    store.write_runs(records)
    rows = compute_metric_rows(plan, records)
    store.write_metrics(rows)
    return rows


def resume(plan: ExperimentPlan, outdir) -> list[tuple]:
    """Complete missing cells of a partially populated store.

    Refuses to touch a store whose manifest digest does not match the plan.
    """
    store = ResultStore(outdir)
    if not store.exists():
        raise FileNotFoundError(f"no manifest in {outdir}")
    manifest = store.read_manifest()
    if manifest.get("digest") != plan.digest():
        raise ValueError("manifest digest does not match the plan; refusing to resume")
    records = store.read_runs()
    missing = [cell for cell in plan.cells() if cell not in records]
    if missing:
        records.update(_execute_cells(plan, missing))
        store.write_runs(records)
    rows = compute_metric_rows(plan, records)
    store.write_metrics(rows)
    return rows
