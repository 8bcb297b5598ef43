"""Single-dataset analysis session with the expert feedback loop.

A session owns the dataset, the active removal profile (base profile plus
analyst-supplied custom stems), and the model trained under the current
seed. Any profile or seed change retrains synchronously and atomically
swaps a new immutable snapshot; the config hash changes with the snapshot
so clients can detect staleness. Mutations are serialized by a lock; reads
work off the current snapshot without locking.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .analysis import aggregate, map_subclasses, partition, top_k, word_report_rows
from .corpus import Requirement, split
from .errors import InvalidStem
from .experiment import ablation_matrix, matrix_to_dict
from .forest import ForestParams, MetricsReport, predict_proba_batch
from .lime import Explanation, LimeConfig, explain_document
from .pipeline import (
    TrainedPipeline,
    dump_json,
    evaluate_pipeline,
    pipeline_to_dict,
    train_pipeline,
)
from .preprocess import PreprocessConfig, default_stopwords, make_profile, preprocess
from .stemmer import stem as porter_stem
from .vectorize import batch_matrix


def config_hash(
    profile_name: str,
    removed_stems: frozenset[str],
    seed: int,
    params: ForestParams,
    test_fraction: float,
) -> str:
    payload = json.dumps(
        {
            "profile": profile_name,
            "removed_stems": sorted(removed_stems),
            "seed": seed,
            "n_trees": params.n_trees,
            "max_depth": params.max_depth,
            "min_samples_split": params.min_samples_split,
            "test_fraction": test_fraction,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Snapshot:
    pipeline: TrainedPipeline
    metrics: MetricsReport
    test_ids: frozenset[int]
    seed: int
    hash: str


class SessionState:
    def __init__(
        self,
        dataset: Sequence[Requirement],
        profile_name: str = "A",
        extra_stems: Sequence[str] = (),
        seed: int = 0,
        test_fraction: float = 0.2,
        params: ForestParams | None = None,
        lime_defaults: LimeConfig | None = None,
    ):
        self.dataset = list(dataset)
        self.by_id = {r.id: r for r in self.dataset}
        self.base_profile = profile_name
        self.custom_stems: set[str] = {porter_stem(w.lower()) for w in extra_stems}
        self.test_fraction = test_fraction
        self.params = params if params is not None else ForestParams()
        self.lime_defaults = lime_defaults if lime_defaults is not None else LimeConfig()
        self.previous_metrics: MetricsReport | None = None
        self._lock = threading.Lock()
        self._explanations: dict = {}
        self._analysis_cache: dict = {}
        self.snapshot = self._train(seed)

    # -------------------------------------------------- training

    def _pp_config(self) -> PreprocessConfig:
        return PreprocessConfig(
            stopwords=default_stopwords(),
            profile=make_profile(self.base_profile, sorted(self.custom_stems)),
        )

    def _train(self, seed: int) -> Snapshot:
        from dataclasses import replace

        pp_config = self._pp_config()
        params = replace(self.params, seed=seed)
        ds = split(self.dataset, self.test_fraction, seed)
        pipeline = train_pipeline(ds.train, pp_config, params)
        metrics = evaluate_pipeline(pipeline, ds.test)
        return Snapshot(
            pipeline=pipeline,
            metrics=metrics,
            test_ids=frozenset(r.id for r in ds.test),
            seed=seed,
            hash=config_hash(
                pipeline.pp_config.profile.name,
                pipeline.pp_config.profile.removed_stems,
                seed,
                params,
                self.test_fraction,
            ),
        )

    def retrain(self, seed: int | None = None) -> Snapshot:
        with self._lock:
            new_seed = self.snapshot.seed if seed is None else seed
            self.previous_metrics = self.snapshot.metrics
            fresh = self._train(new_seed)
            self._explanations.clear()
            self._analysis_cache.clear()
            self.snapshot = fresh
            return fresh

    def apply_feedback(self, add_stems: Sequence[str] = (), remove_stems: Sequence[str] = ()) -> Snapshot:
        """Update the custom removal set and retrain synchronously.

        Entries are stemmed here, so plain words are accepted; invalid
        entries (non-alphabetic) raise InvalidStem before any state changes.
        """
        for word in list(add_stems) + list(remove_stems):
            if not word or not word.isalpha() or word != word.lower():
                raise InvalidStem(f"not a lowercase alphabetic word: {word!r}")
        with self._lock:
            for word in add_stems:
                self.custom_stems.add(porter_stem(word))
            for word in remove_stems:
                self.custom_stems.discard(porter_stem(word))
            self.previous_metrics = self.snapshot.metrics
            fresh = self._train(self.snapshot.seed)
            self._explanations.clear()
            self._analysis_cache.clear()
            self.snapshot = fresh
            return fresh

    # -------------------------------------------------- reads

    def explanation(self, requirement_id: int, n_samples: int | None = None, top_k_words: int | None = None) -> Explanation:
        snap = self.snapshot
        cfg = self.lime_defaults
        if n_samples is not None or top_k_words is not None:
            from dataclasses import replace

            cfg = replace(
                cfg,
                n_samples=n_samples if n_samples is not None else cfg.n_samples,
                top_k=top_k_words if top_k_words is not None else cfg.top_k,
            )
        key = (requirement_id, cfg.n_samples, cfg.top_k, snap.hash)
        if key not in self._explanations:
            requirement = self.by_id[requirement_id]
            doc = preprocess(requirement, snap.pipeline.pp_config)
            self._explanations[key] = explain_document(snap.pipeline.model, doc, cfg)
        return self._explanations[key]

    def predictions(self, requirements: Sequence[Requirement]):
        snap = self.snapshot
        docs = [preprocess(r, snap.pipeline.pp_config) for r in requirements]
        X = batch_matrix(docs, snap.pipeline.vocab)
        return predict_proba_batch(snap.pipeline.model, X)[:, 1]

    def word_analysis(self) -> dict:
        """Aggregated word statistics over the current test split."""
        snap = self.snapshot
        key = ("word-sets", snap.hash)
        if key not in self._analysis_cache:
            explanations = []
            for rid in sorted(snap.test_ids):
                doc = preprocess(self.by_id[rid], snap.pipeline.pp_config)
                if not doc.stems:
                    continue
                explanations.append(explain_document(snap.pipeline.model, doc, self.lime_defaults))
            stats = aggregate(explanations)
            parts = partition(stats)
            subclasses = map_subclasses(explanations, self.by_id)
            self._analysis_cache[key] = {
                "supportive": {
                    "counts": dict(stats.supportive_counts),
                    "total": stats.n_supportive,
                    "top30": [
                        {"stem": s, "percentage": p}
                        for s, p in top_k(stats.supportive_counts, 30)
                    ]
                    if stats.n_supportive
                    else [],
                },
                "distractive": {
                    "counts": dict(stats.distractive_counts),
                    "total": stats.n_distractive,
                    "top30": [
                        {"stem": s, "percentage": p}
                        for s, p in top_k(stats.distractive_counts, 30)
                    ]
                    if stats.n_distractive
                    else [],
                },
                "sets": {
                    "A": sorted(parts.distractive_only),
                    "B": sorted(parts.supportive_only),
                    "C": sorted(parts.common),
                },
                "subclasses": dict(sorted(subclasses.items())),
                "rows": word_report_rows(stats, parts, subclasses),
            }
        return self._analysis_cache[key]

    def ablation(self, runs: int = 10, alpha: float = 0.05) -> dict:
        snap = self.snapshot
        key = ("ablation", runs, alpha, snap.hash)
        if key not in self._analysis_cache:
            matrix = ablation_matrix(
                self.dataset,
                n_runs=runs,
                base_seed=snap.seed,
                alpha=alpha,
                params=self.params,
                test_fraction=self.test_fraction,
            )
            self._analysis_cache[key] = matrix_to_dict(matrix)
        return self._analysis_cache[key]

    def export_model(self, path: str | Path | None = None) -> str:
        return dump_json(pipeline_to_dict(self.snapshot.pipeline), path)
