"""Multi-run evaluation protocol and the feature-removal significance matrix.

Trial i of a batch reuses seed base_seed + i for both the train/test split
and the forest, so a batch is fully reproducible. The ablation matrix runs
one batch per removal profile and compares metric samples pairwise with
Welch's t-test at the given significance level.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .corpus import Requirement, split
from .errors import ReqlensError
from .forest import ForestParams, MetricsReport
from .pipeline import evaluate_pipeline, train_pipeline
from .preprocess import PreprocessConfig, default_stopwords, make_profile
from .stats import TTestResult, welch_t_test

PROFILE_ORDER = ("A", "A-M", "A-M-C")
METRICS = ("f1", "accuracy", "precision", "recall")


@dataclass(frozen=True)
class TrialResult:
    profile: str
    seed: int
    metrics: MetricsReport


@dataclass(frozen=True)
class SignificanceMatrix:
    profiles: tuple[str, ...]
    cells: dict  # metric name -> NxN nested list of "S"/"N"
    tests: dict  # metric name -> {(i, j): TTestResult} for i < j
    alpha: float


class TrialFailed(ReqlensError):
    def __init__(self, trial: int, cause: Exception):
        self.trial = trial
        self.cause = cause
        super().__init__(f"trial {trial} failed: {cause}")


def run_batch(
    dataset: Sequence[Requirement],
    profile_name: str,
    n_runs: int,
    base_seed: int,
    params: ForestParams | None = None,
    test_fraction: float = 0.2,
    extra_stems: Sequence[str] = (),
) -> list[TrialResult]:
    if n_runs < 2:
        raise ValueError("n_runs must be >= 2")
    params = params if params is not None else ForestParams()
    pp_config = PreprocessConfig(
        stopwords=default_stopwords(),
        profile=make_profile(profile_name, extra_stems),
    )
    results = []
    for i in range(n_runs):
        seed = base_seed + i
        try:
            ds = split(dataset, test_fraction, seed)
            pipeline = train_pipeline(ds.train, pp_config, replace(params, seed=seed))
            metrics = evaluate_pipeline(pipeline, ds.test)
        except ReqlensError as exc:
            raise TrialFailed(i, exc) from exc
        results.append(TrialResult(profile=pp_config.profile.name, seed=seed, metrics=metrics))
    return results


def metric_samples(results: Sequence[TrialResult], metric: str) -> list[float]:
    return [getattr(r.metrics, metric) for r in results]


def mean_metrics(results: Sequence[TrialResult]) -> dict[str, float]:
    return {m: sum(metric_samples(results, m)) / len(results) for m in METRICS}


def ablation_matrix(
    dataset: Sequence[Requirement],
    n_runs: int,
    base_seed: int,
    alpha: float = 0.05,
    params: ForestParams | None = None,
    profiles: tuple[str, ...] = PROFILE_ORDER,
    test_fraction: float = 0.2,
) -> SignificanceMatrix:
    batches = {
        p: run_batch(dataset, p, n_runs, base_seed, params, test_fraction) for p in profiles
    }
    k = len(profiles)
    cells: dict[str, list[list[str]]] = {}
    tests: dict[str, dict[tuple[int, int], TTestResult]] = {}
    for metric in METRICS:
        grid = [["N"] * k for _ in range(k)]
        pairwise: dict[tuple[int, int], TTestResult] = {}
        for i in range(k):
            for j in range(i + 1, k):
                result = welch_t_test(
                    metric_samples(batches[profiles[i]], metric),
                    metric_samples(batches[profiles[j]], metric),
                    alpha,
                )
                pairwise[(i, j)] = result
                mark = "S" if result.significant else "N"
                grid[i][j] = mark
                grid[j][i] = mark
        cells[metric] = grid
        tests[metric] = pairwise
    return SignificanceMatrix(profiles=tuple(profiles), cells=cells, tests=tests, alpha=alpha)


def matrix_to_dict(matrix: SignificanceMatrix) -> dict:
    return {
        "alpha": matrix.alpha,
        "profiles": list(matrix.profiles),
        "cells": {metric: matrix.cells[metric] for metric in METRICS},
        "tests": {
            metric: [
                {
                    "pair": [matrix.profiles[i], matrix.profiles[j]],
                    "t_statistic": r.t_statistic,
                    "degrees_of_freedom": r.degrees_of_freedom,
                    "p_value": r.p_value,
                    "significant": r.significant,
                }
                for (i, j), r in sorted(matrix.tests[metric].items())
            ]
            for metric in METRICS
        },
    }


def format_matrix(matrix: SignificanceMatrix) -> str:
    """Plain-text table: one block per metric, profiles on both axes."""
    width = max(len(p) for p in matrix.profiles) + 2
    lines = []
    for metric in METRICS:
        lines.append(metric.capitalize())
        header = " " * width + "".join(p.ljust(width) for p in matrix.profiles)
        lines.append(header)
        for i, p in enumerate(matrix.profiles):
            row = p.ljust(width) + "".join(
                c.ljust(width) for c in matrix.cells[metric][i]
            )
            lines.append(row)
        lines.append("")
    return "\n".join(lines)
