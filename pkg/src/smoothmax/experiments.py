"""Experiment harness: first-certifying-t comparisons on random inputs.

All randomness flows through per-cell generator streams derived from
(seed, cell indices, rep), so runs are deterministic for a fixed seed
regardless of execution order.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .approx import eval_L, eval_R
from .vectors import RealVector, realvec

# The LogSumExp error floor is log(mu)/log(t), so tight targets need
# astronomically large t (t* = mu^(1/delta)); evaluation is log-domain
# safe, so the search budget only has to stay below float overflow.
_T_BUDGET = 1e300

DELTA_RULES = ("one", "exp1", "inv_n", "one_hundredth")


@dataclass(frozen=True)
class ExperimentConfig:
    """Configuration for one heatmap experiment.

    kind: 'integer' (fixed integer maximum M with multiplicity mu),
    'uniform' (floats in [0,1] with a planted gap), or 'cluster' (noisy
    repeated measurements over a (gap, noise) grid).
    """

    kind: str
    M: int = 50
    n_max: int = 50
    reps: int = 10
    delta_rule: str = "one"
    g_values: Tuple[float, ...] = (0.01, 0.25, 0.5, 0.75, 1.0)
    eps_values: Tuple[float, ...] = (0.01, 0.25, 0.5, 0.75, 1.0)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("integer", "uniform", "cluster"):
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.kind == "integer" and self.M < 2:
            raise ValueError("integer experiment needs M >= 2")
        if self.delta_rule not in DELTA_RULES:
            raise ValueError(f"delta_rule must be one of {DELTA_RULES}")


@dataclass(frozen=True)
class TStarRecord:
    """One subexperiment: the first certifying t for both methods."""

    n: int
    mu: int
    t_star_L: float
    t_star_R: float

    @property
    def diff(self) -> float:
        return self.t_star_L - self.t_star_R


def find_tstar(v: RealVector, method: str, delta: float) -> float:
    """First t on the search schedule whose approximation error is
    below delta: bracket by doubling t - 1, then bisect to 1e-3
    relative."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if method == "L":
        err = lambda t: abs(eval_L(v, t).value - v.max)
    elif method == "R":
        err = lambda t: abs(v.max - eval_R(v, t).value)
    else:
        raise ValueError("method must be 'L' or 'R'")

    lo = None
    t = 1.0 + 1e-3
    while err(t) >= delta:
        lo = t
        t = 1.0 + 2.0 * (t - 1.0)
        if t > _T_BUDGET:
            raise RuntimeError("t-search budget exhausted")
    if lo is None:
        return t
    hi = t
    while hi - lo > 1e-3 * hi:
        mid = 0.5 * (lo + hi)
        if err(mid) < delta:
            hi = mid
        else:
            lo = mid
    return hi


def _cell_rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng([seed & 0xFFFFFFFFFFFFFFFF, *key])


def _integer_vector(rng: np.random.Generator, n: int, mu: int, M: int) -> RealVector:
    rest = rng.integers(1, M, size=n - mu) if n > mu else []
    return realvec([M] * mu + [int(x) for x in rest])


def _uniform_vector(rng: np.random.Generator, n: int, mu: int) -> RealVector:
    rest = rng.uniform(0.0, 1.0, size=n - mu) * (n - 1) / n if n > mu else []
    return realvec([1.0] * mu + [float(x) for x in rest])


def _delta_for(rule: str, n: int) -> float:
    return {
        "one": 1.0,
        "exp1": math.e,
        "inv_n": 1.0 / n,
        "one_hundredth": 0.01,
    }[rule]


def run_experiment(cfg: ExperimentConfig) -> str:
    """Run the configured experiment and return its CSV table."""
    if cfg.kind == "integer":
        return _run_heatmap(cfg, integer=True)
    if cfg.kind == "uniform":
        return _run_heatmap(cfg, integer=False)
    return _run_cluster(cfg)


def _run_heatmap(cfg: ExperimentConfig, integer: bool) -> str:
    out = io.StringIO()
    out.write("n,mu,statistic\n")
    for n in range(1, cfg.n_max + 1):
        for mu in range(1, n + 1):
            records = []
            for rep in range(cfg.reps):
                rng = _cell_rng(cfg.seed, n, mu, rep)
                if integer:
                    v = _integer_vector(rng, n, mu, cfg.M)
                    delta = 1.0
                else:
                    v = _uniform_vector(rng, n, mu)
                    delta = _delta_for(cfg.delta_rule, n)
                records.append(TStarRecord(
                    n, mu,
                    find_tstar(v, "L", delta),
                    find_tstar(v, "R", delta),
                ))
            if integer:
                stat = float(np.mean(
                    [math.log(max(1.0 + r.diff, 1e-12)) for r in records]
                ))
            else:
                alpha = max(1.0 - min(r.diff for r in records), 1e-9)
                stat = float(np.mean(
                    [math.log(alpha + r.diff) - math.log(alpha) for r in records]
                ))
            out.write(f"{n},{mu},{stat!r}\n")
    return out.getvalue()


def _cluster_vector(
    rng: np.random.Generator, g: float, eps: float
) -> RealVector:
    w = [0.0] * 5
    w[4] = 1.0
    w[3] = 1.0 - g
    w[0:3] = list(rng.uniform(0.0, 1.0 - g, size=3))
    samples: List[float] = []
    for wi in w:
        samples.extend(rng.uniform(wi - eps, wi + eps, size=20))
    return realvec(samples)


def _run_cluster(cfg: ExperimentConfig) -> str:
    out = io.StringIO()
    out.write("g,eps,mean_error,successes\n")
    for gi, g in enumerate(cfg.g_values):
        for ei, eps in enumerate(cfg.eps_values):
            if g <= 0 or eps <= 0:
                raise ValueError("cluster grid needs positive g and eps")
            errors = []
            successes = 0
            for rep in range(cfg.reps):
                rng = _cell_rng(cfg.seed, gi, ei, rep)
                v = _cluster_vector(rng, g, eps)
                # Heuristic evaluation point from the ratio bound with
                # n = 5 measurements of multiplicity 1 at gap g; worked
                # in the log domain so huge t* cannot overflow.
                u_star = math.log(4.0 * g / eps) / g
                t_star = math.exp(min(max(u_star, 1e-6), 700.0))
                err = abs(1.0 - eval_R(v, t_star).value)
                errors.append(err)
                if err < eps:
                    successes += 1
            out.write(f"{g!r},{eps!r},{float(np.mean(errors))!r},{successes}\n")
    return out.getvalue()
