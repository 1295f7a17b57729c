"""Sample-complexity-to-threshold experiments on simulated circuit costs.

For each (size, seed) pair a fresh instance is built, parameters start
uniform-random, and the chosen optimizer runs until the exact expected
cost of its incumbent falls to the threshold or the shot budget is spent.
Crossing is detected on the exact simulated expectation (an oracle call,
ledgered separately from the shot budget), which removes detection noise
from the comparison. Censored runs enter the quantiles as +inf; a size
whose crossing rate drops below one half is marked failed.
"""

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..bandits import CountingBandit
from ..baselines import (PowellBrentConfig, SpsaConfig, powell_brent, spsa)
from ..lines import DriverConfig, powell_driver, random_direction_driver
from ..qsim import MAX_QUBITS, PqcBandit, QaoaBandit, erdos_renyi
from ..rng import SeededRng
from .config import ConfigError
from .output import write_csv

VQA_EXPERIMENTS = ("pqc", "qaoa")
VQA_OPTIMIZERS = ("rr_powell", "rr_reject", "rr_aim", "spsa", "powell_brent")
DEFAULT_THRESHOLDS = {"pqc": 0.4, "qaoa": 0.2}
DEFAULT_BUDGET = 10_000_000

RUN_HEADER = ["experiment", "optimizer", "size", "seed", "instance",
              "status", "n_total", "samples_spent", "oracle_evals",
              "final_cost"]
AGG_HEADER = ["experiment", "optimizer", "size", "n_runs", "n_crossed",
              "median", "q25", "q75", "status"]


def build_instance(experiment, size, spec, rng):
    """Construct the per-run bandit; qaoa draws a fresh random graph."""
    if experiment == "pqc":
        if not 1 <= size <= MAX_QUBITS:
            raise ConfigError(f"pqc size {size} outside 1..{MAX_QUBITS}")
        raw_layers = spec.get("instance", "layers")
        layers = None if raw_layers is None else spec.get_int("instance", "layers")
        bandit = PqcBandit(size, layers,
                           lipschitz=spec.get_float("instance", "lipschitz", 0.5))
        return bandit, f"pqc-n{size}-l{bandit.layers}"
    if experiment == "qaoa":
        if not 2 <= size <= MAX_QUBITS:
            raise ConfigError(f"qaoa size {size} outside 2..{MAX_QUBITS}")
        edge_prob = spec.get_float("instance", "edge_prob", 0.5)
        graph = erdos_renyi(size, rng, edge_prob)
        while graph.m == 0:  # an edgeless draw has no cut to score
            graph = erdos_renyi(size, rng, edge_prob)
        bandit = QaoaBandit(graph,
                            layers=spec.get_int("instance", "layers", 2),
                            lipschitz=spec.get_float("instance", "lipschitz", 0.5))
        return bandit, f"qaoa-n{size}-m{graph.m}"
    raise ConfigError(f"unknown experiment {experiment!r}")


def _driver_config(spec, name, budget):
    acceptance = "aim" if name == "rr_aim" else "reject"
    return DriverConfig(
        lipschitz=spec.get_float("optimizer", "lipschitz", 0.5),
        delta=spec.get_float("optimizer", "delta", 20.0),
        q=spec.get_float("optimizer", "q", 400.0),
        d_max=spec.get_int("optimizer", "d_max", 1),
        epsilon_line=spec.get_float("optimizer", "epsilon_line", 2.0 ** -7),
        wrap=spec.get_str("optimizer", "wrap", "periodic"),
        acceptance=acceptance,
        raw_location_acceptance=spec.get_bool(
            "optimizer", "raw_location_acceptance", False),
        early_stop_depth1=spec.get_bool("optimizer", "early_stop_depth1", False),
        max_steps=spec.get_int("optimizer", "max_steps", 100_000),
        budget=budget)


def _spsa_config(spec, budget):
    shots = spec.get_int("optimizer", "shots_per_eval", 10_000)
    default_iters = budget // (2 * shots) if budget else 200
    return SpsaConfig(
        max_iters=spec.get_int("optimizer", "max_iters", max(1, default_iters)),
        shots_per_eval=shots,
        a=(None if spec.get("optimizer", "a") is None
           else spec.get_float("optimizer", "a")),
        c=spec.get_float("optimizer", "c", 0.1),
        alpha=spec.get_float("optimizer", "alpha", 0.602),
        gamma=spec.get_float("optimizer", "gamma", 0.101),
        budget=budget)


def _powell_brent_config(spec, budget):
    return PowellBrentConfig(
        max_iters=spec.get_int("optimizer", "max_iters", 50),
        shots_per_eval=spec.get_int("optimizer", "shots_per_eval", 10_000),
        xtol=spec.get_float("optimizer", "xtol", 1e-4),
        ftol=spec.get_float("optimizer", "ftol", 1e-6),
        budget=budget)


def run_single(experiment, optimizer, size, seed, threshold, budget, spec):
    """One seeded run; returns the runs.csv row as a dict.

    Reproducibility comes from the (seed, size) derived stream: child 0
    builds the instance, child 1 draws the start point, child 2 feeds the
    optimizer. The bandit is wrapped in a pull counter so the reported
    sample count is the bandit-interface truth rather than optimizer
    bookkeeping.
    """
    run_rng = SeededRng(seed, key=(size,))
    bandit, label = build_instance(experiment, size, spec, run_rng.child(0))
    counting = CountingBandit(bandit)
    start = run_rng.child(1).random(bandit.dimension)
    oracle = {"evals": 0}

    def crossed(point):
        oracle["evals"] += 1
        return bandit.mean(point) <= threshold

    if crossed(start):
        point = start
        did_cross = True
    else:
        opt_rng = run_rng.child(2)
        if optimizer == "rr_powell":
            res = powell_driver(counting, start,
                                _driver_config(spec, optimizer, budget),
                                opt_rng, stop_condition=crossed)
        elif optimizer in ("rr_reject", "rr_aim"):
            res = random_direction_driver(counting, start,
                                          _driver_config(spec, optimizer, budget),
                                          opt_rng, stop_condition=crossed)
        elif optimizer == "spsa":
            res = spsa(counting, start, _spsa_config(spec, budget),
                       opt_rng, stop_condition=crossed)
        elif optimizer == "powell_brent":
            res = powell_brent(counting, start,
                               _powell_brent_config(spec, budget),
                               opt_rng, stop_condition=crossed)
        else:
            raise ConfigError(f"unknown optimizer {optimizer!r}")
        point = res.point
        did_cross = res.stopped_early

    return {
        "experiment": experiment, "optimizer": optimizer, "size": size,
        "seed": seed, "instance": label,
        "status": "crossed" if did_cross else "censored",
        "n_total": counting.count if did_cross else math.inf,
        "samples_spent": counting.count,
        "oracle_evals": oracle["evals"],
        "final_cost": float(bandit.mean(point)),
    }


def _worker(job):
    return run_single(*job)


def midpoint_quantile(values, q):
    """Midpoint-interpolated quantile that tolerates +inf entries.

    numpy's percentile interpolates as a + (b-a)*t, which turns two +inf
    neighbors into nan; averaging the two bracketing order statistics
    directly keeps inf arithmetic well defined.
    """
    if not 0.0 <= q <= 1.0:
        raise ValueError("quantile must be in [0, 1]")
    ordered = np.sort(np.asarray(values, dtype=np.float64))
    if ordered.size == 0:
        raise ValueError("need at least one value")
    h = (ordered.size - 1) * q
    lo = math.floor(h)
    hi = math.ceil(h)
    if lo == hi:
        return float(ordered[lo])
    return float(0.5 * (ordered[lo] + ordered[hi]))


def aggregate(rows):
    """Median and quartiles of n_total per size, censored runs as +inf."""
    out = []
    by_size = {}
    for row in rows:
        by_size.setdefault(row["size"], []).append(row)
    for size in sorted(by_size):
        group = by_size[size]
        values = np.array([float(row["n_total"]) for row in group])
        n_crossed = int(np.isfinite(values).sum())
        q25, median, q75 = (midpoint_quantile(values, q)
                            for q in (0.25, 0.5, 0.75))
        out.append({
            "experiment": group[0]["experiment"],
            "optimizer": group[0]["optimizer"],
            "size": size, "n_runs": len(group), "n_crossed": n_crossed,
            "median": median, "q25": q25, "q75": q75,
            "status": "ok" if 2 * n_crossed >= len(group) else "failed",
        })
    return out


def run_vqa(experiment, spec):
    """Run the (size, seed) grid for one optimizer; write runs + aggregate CSVs."""
    if experiment not in VQA_EXPERIMENTS:
        raise ConfigError(f"experiment must be one of {VQA_EXPERIMENTS}")
    optimizer = spec.get_str("run", "optimizer", "rr_powell")
    if optimizer not in VQA_OPTIMIZERS:
        raise ConfigError(
            f"run.optimizer must be one of {VQA_OPTIMIZERS}, got {optimizer!r}")
    threshold = spec.get_float("run", "threshold",
                               DEFAULT_THRESHOLDS[experiment])
    if not 0.0 < threshold < 1.0:
        raise ConfigError(f"run.threshold must be in (0,1), got {threshold}")
    budget = spec.get_int("run", "budget", DEFAULT_BUDGET)
    if budget < 1:
        raise ConfigError("run.budget must be positive")
    workers = spec.get_int("run", "workers", 1)
    sizes = spec.sizes()
    seeds = spec.seeds()
    out_dir = spec.get_str("run", "out", os.path.join("results", experiment))

    jobs = [(experiment, optimizer, size, seed, threshold, budget, spec)
            for size, seed in itertools.product(sizes, seeds)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_worker, jobs))
    else:
        rows = [_worker(job) for job in jobs]
    rows.sort(key=lambda row: (row["size"], row["seed"]))

    agg_rows = aggregate(rows)
    runs_path = write_csv(os.path.join(out_dir, "runs.csv"),
                          RUN_HEADER, rows)
    agg_path = write_csv(os.path.join(out_dir, "aggregate.csv"),
                         AGG_HEADER, agg_rows)
    return {"runs": runs_path, "aggregate": agg_path, "rows": rows,
            "aggregates": agg_rows}
