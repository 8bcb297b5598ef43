"""Random forest binary classifier over TF-IDF vectors.

Each tree trains on a bootstrap resample drawn from a per-tree seed derived
deterministically from the forest seed; nodes scan floor(sqrt(V)) randomly
sampled features (min 1) and take the split minimizing weighted child Gini.
Class probability is the fraction of trees voting each class, so outputs
are exact rationals with denominator n_trees.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _tree
from .errors import EmptyNode, EmptyTestSet, EmptyTrainingSet
from .vectorize import TfIdfVector, Vocabulary, to_dense

MODEL_FORMAT_VERSION = 1

FR_CLASS = 0
NFR_CLASS = 1


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    max_depth: int | None = None
    min_samples_split: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        if self.min_samples_split < 2:
            raise ValueError("min_samples_split must be >= 2")


@dataclass
class Tree:
    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    count_fr: np.ndarray
    count_nfr: np.ndarray


@dataclass
class ForestModel:
    trees: list[Tree]
    params: ForestParams
    vocab: Vocabulary
    idf: np.ndarray


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    fn: int
    tn: int

    def as_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
        }


def gini(class_counts: tuple[int, int]) -> float:
    c0, c1 = class_counts
    total = c0 + c1
    if total == 0:
        raise EmptyNode("gini of an empty node is undefined")
    p0 = c0 / total
    p1 = c1 / total
    return 1.0 - p0 * p0 - p1 * p1


def features_per_split(n_features: int) -> int:
    return max(1, int(math.isqrt(n_features)))


def _tree_seed_states(params: ForestParams, n_trees: int):
    """Per-tree (bootstrap rng, xorshift state) pairs, all derived from
    params.seed so forests are reproducible tree by tree."""
    children = np.random.SeedSequence(params.seed).spawn(n_trees)
    out = []
    for child in children:
        rng = np.random.default_rng(child)
        state = np.uint64(child.generate_state(1, np.uint64)[0] | np.uint64(1))
        out.append((rng, state))
    return out


def fit(
    train_vectors: Sequence[tuple[TfIdfVector, int]],
    params: ForestParams,
    vocab: Vocabulary,
) -> ForestModel:
    """Train a forest on (vector, class) pairs; classes are 0 = FR, 1 = NFR."""
    if not train_vectors:
        raise EmptyTrainingSet("no training samples")
    n = len(train_vectors)
    n_features = vocab.size
    X = np.zeros((n, n_features))
    y = np.zeros(n, np.int64)
    for row, (vec, label) in enumerate(train_vectors):
        for i, w in vec.entries.items():
            X[row, i] = w
        y[row] = label
    if len(set(y.tolist())) < 2:
        warnings.warn("training set contains a single class", stacklevel=2)

    max_depth = -1 if params.max_depth is None else params.max_depth
    n_sub = features_per_split(n_features) if n_features else 1
    trees = []
    for rng, state in _tree_seed_states(params, params.n_trees):
        bootstrap = rng.integers(0, n, n).astype(np.int64)
        if n_features == 0:
            c1 = int(y[bootstrap].sum())
            trees.append(
                Tree(
                    feature=np.array([-1], np.int64),
                    threshold=np.array([0.0]),
                    left=np.array([-1], np.int64),
                    right=np.array([-1], np.int64),
                    count_fr=np.array([n - c1], np.int64),
                    count_nfr=np.array([c1], np.int64),
                )
            )
            continue
        arrays = _tree.grow_tree(X, y, bootstrap, max_depth, params.min_samples_split, n_sub, state)
        trees.append(Tree(*arrays))
    return ForestModel(trees=trees, params=params, vocab=vocab, idf=vocab.idf_array())


def predict_proba_batch(model: ForestModel, X: np.ndarray) -> np.ndarray:
    """(n_rows, 2) array of (P(FR), P(NFR)) vote fractions."""
    votes = np.zeros(X.shape[0], np.int64)
    for t in model.trees:
        votes += _tree.tree_votes(t.feature, t.threshold, t.left, t.right, t.count_fr, t.count_nfr, X)
    p_nfr = votes / len(model.trees)
    return np.column_stack([1.0 - p_nfr, p_nfr])


def predict_proba(model: ForestModel, vector: TfIdfVector) -> tuple[float, float]:
    probs = predict_proba_batch(model, to_dense(vector, model.vocab.size)[None, :])
    return float(probs[0, 0]), float(probs[0, 1])


def predict_label(p_nfr: float) -> int:
    """Hard decision from the NFR vote fraction; ties go to NFR."""
    return NFR_CLASS if p_nfr >= 0.5 else FR_CLASS


def evaluate(model: ForestModel, test_vectors: Sequence[tuple[TfIdfVector, int]]) -> MetricsReport:
    """Metrics with NFR as the positive class; 0/0 rates are reported as 0."""
    if not test_vectors:
        raise EmptyTestSet("no test samples")
    X = np.zeros((len(test_vectors), model.vocab.size))
    y = np.zeros(len(test_vectors), np.int64)
    for row, (vec, label) in enumerate(test_vectors):
        for i, w in vec.entries.items():
            X[row, i] = w
        y[row] = label
    p_nfr = predict_proba_batch(model, X)[:, 1]
    pred = np.where(p_nfr >= 0.5, NFR_CLASS, FR_CLASS)
    tp = int(np.sum((pred == NFR_CLASS) & (y == NFR_CLASS)))
    fp = int(np.sum((pred == NFR_CLASS) & (y == FR_CLASS)))
    fn = int(np.sum((pred == FR_CLASS) & (y == NFR_CLASS)))
    tn = int(np.sum((pred == FR_CLASS) & (y == FR_CLASS)))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    accuracy = (tp + tn) / len(test_vectors)
    return MetricsReport(
        accuracy=accuracy, precision=precision, recall=recall, f1=f1, tp=tp, fp=fp, fn=fn, tn=tn
    )


def forest_to_dict(model: ForestModel) -> dict:
    from .vectorize import vocab_to_dict

    return {
        "format_version": MODEL_FORMAT_VERSION,
        "params": {
            "n_trees": model.params.n_trees,
            "max_depth": model.params.max_depth,
            "min_samples_split": model.params.min_samples_split,
            "seed": model.params.seed,
        },
        "vocabulary": vocab_to_dict(model.vocab),
        "idf": model.idf.tolist(),
        "trees": [
            {
                "feature": t.feature.tolist(),
                "threshold": t.threshold.tolist(),
                "left": t.left.tolist(),
                "right": t.right.tolist(),
                "count_fr": t.count_fr.tolist(),
                "count_nfr": t.count_nfr.tolist(),
            }
            for t in model.trees
        ],
    }


def forest_from_dict(data: dict) -> ForestModel:
    from .vectorize import vocab_from_dict

    if data.get("format_version") != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format: {data.get('format_version')!r}")
    params = ForestParams(**data["params"])
    vocab = vocab_from_dict(data["vocabulary"])
    trees = [
        Tree(
            feature=np.asarray(t["feature"], np.int64),
            threshold=np.asarray(t["threshold"], np.float64),
            left=np.asarray(t["left"], np.int64),
            right=np.asarray(t["right"], np.int64),
            count_fr=np.asarray(t["count_fr"], np.int64),
            count_nfr=np.asarray(t["count_nfr"], np.int64),
        )
        for t in data["trees"]
    ]
    return ForestModel(trees=trees, params=params, vocab=vocab, idf=np.asarray(data["idf"]))
