"""End-to-end training pipeline bundle: preprocessing profile + vocabulary +
forest, with versioned JSON persistence shared by the CLI and the service."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus import FR, Requirement
from .forest import (
    ForestModel,
    ForestParams,
    MetricsReport,
    evaluate,
    fit,
    forest_from_dict,
    forest_to_dict,
)
from .preprocess import (
    PreprocessConfig,
    RemovalProfile,
    default_stopwords,
    preprocess,
)
from .vectorize import TfIdfVector, Vocabulary, build_vocabulary, transform

PIPELINE_FORMAT_VERSION = 1


def class_of(requirement: Requirement) -> int:
    return 0 if requirement.binary_label == FR else 1


@dataclass
class TrainedPipeline:
    pp_config: PreprocessConfig
    vocab: Vocabulary
    model: ForestModel

    @property
    def params(self) -> ForestParams:
        return self.model.params


def vectorize_requirements(
    requirements: Sequence[Requirement],
    pp_config: PreprocessConfig,
    vocab: Vocabulary,
) -> list[tuple[TfIdfVector, int]]:
    return [
        (transform(preprocess(r, pp_config), vocab), class_of(r)) for r in requirements
    ]


def train_pipeline(
    train_requirements: Sequence[Requirement],
    pp_config: PreprocessConfig,
    params: ForestParams,
) -> TrainedPipeline:
    docs = [preprocess(r, pp_config) for r in train_requirements]
    vocab = build_vocabulary(docs)
    vectors = [
        (transform(doc, vocab), class_of(r))
        for doc, r in zip(docs, train_requirements)
    ]
    model = fit(vectors, params, vocab)
    return TrainedPipeline(pp_config=pp_config, vocab=vocab, model=model)


def evaluate_pipeline(
    pipeline: TrainedPipeline, test_requirements: Sequence[Requirement]
) -> MetricsReport:
    vectors = vectorize_requirements(test_requirements, pipeline.pp_config, pipeline.vocab)
    return evaluate(pipeline.model, vectors)


def pipeline_to_dict(pipeline: TrainedPipeline) -> dict:
    return {
        "format_version": PIPELINE_FORMAT_VERSION,
        "profile": {
            "name": pipeline.pp_config.profile.name,
            "removed_stems": sorted(pipeline.pp_config.profile.removed_stems),
        },
        "forest": forest_to_dict(pipeline.model),
    }


def pipeline_from_dict(data: dict) -> TrainedPipeline:
    if data.get("format_version") != PIPELINE_FORMAT_VERSION:
        raise ValueError(f"unsupported pipeline format: {data.get('format_version')!r}")
    profile = RemovalProfile(
        name=data["profile"]["name"],
        removed_stems=frozenset(data["profile"]["removed_stems"]),
    )
    pp_config = PreprocessConfig(stopwords=default_stopwords(), profile=profile)
    model = forest_from_dict(data["forest"])
    return TrainedPipeline(pp_config=pp_config, vocab=model.vocab, model=model)


def dump_json(obj: dict, path: str | Path | None = None) -> str:
    """Canonical JSON (sorted keys, fixed layout) so artifacts are
    byte-identical across runs with equal inputs."""
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def save_pipeline(pipeline: TrainedPipeline, path: str | Path) -> None:
    dump_json(pipeline_to_dict(pipeline), path)


def load_pipeline(path: str | Path) -> TrainedPipeline:
    with open(path, encoding="utf-8") as fh:
        return pipeline_from_dict(json.load(fh))
