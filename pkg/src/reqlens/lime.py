"""Local surrogate explanations for single predictions.

The interpretable representation of a document is presence/absence over its
distinct stems (first-occurrence order). Perturbed variants drop a uniform
random number of stems; each variant is re-vectorized and scored by the
black-box classifier, samples are weighted by a Gaussian kernel over the
Euclidean distance between binary masks, and a weighted ridge regression
fitted on (mask, probability) pairs yields signed per-stem importances.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .corpus import Requirement
from .errors import EmptyDocument, NonPositiveSigma, SingularSystem
from .forest import ForestModel, predict_proba_batch
from .preprocess import PreprocessConfig, ProcessedDoc, preprocess

_RETRY_LAMBDA = 1e-6


@dataclass(frozen=True)
class LimeConfig:
    # sigma is sized so that masks dropping one or two stems dominate the
    # fit; with a wide kernel the regression is instead dominated by
    # mostly-empty documents, whose scores collapse to the class prior and
    # flip the sign semantics of the weights
    n_samples: int = 1000
    sigma: float = 0.5
    ridge_lambda: float = 1.0
    top_k: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.n_samples < 10:
            raise ValueError("n_samples must be >= 10")
        if self.sigma <= 0:
            raise NonPositiveSigma("sigma must be positive")
        if self.ridge_lambda < 0:
            raise ValueError("ridge_lambda must be >= 0")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")


@dataclass(frozen=True)
class Explanation:
    requirement_id: int
    prob_nfr: float
    intercept: float
    word_weights: tuple[tuple[str, float], ...]

    def supportive(self) -> list[str]:
        return [s for s, w in self.word_weights if w > 0]

    def distractive(self) -> list[str]:
        return [s for s, w in self.word_weights if w < 0]


def distinct_stems(doc: ProcessedDoc) -> list[str]:
    """The doc's distinct stems in first-occurrence order (mask axis)."""
    return list(dict.fromkeys(doc.stems))


def perturb(doc: ProcessedDoc, config: LimeConfig) -> np.ndarray:
    """(n_samples + 1, m) binary mask matrix; row 0 is the all-ones mask.

    Each perturbed row drops k ~ Uniform{1..m} distinct stems chosen
    uniformly at random; deterministic under config.seed.
    """
    m = len(doc.distinct_stems)
    if m == 0:
        raise EmptyDocument(f"requirement {doc.requirement_id} has no stems")
    rng = np.random.default_rng(config.seed)
    masks = np.ones((config.n_samples + 1, m), np.float64)
    for row in range(1, config.n_samples + 1):
        k = int(rng.integers(1, m + 1))
        masks[row, rng.choice(m, size=k, replace=False)] = 0.0
    return masks


def mask_distance(masks: np.ndarray) -> np.ndarray:
    """Euclidean distance of each mask from the all-ones mask."""
    m = masks.shape[1]
    return np.sqrt(m - masks.sum(axis=1))


def kernel_weight(distance, sigma: float):
    """Gaussian proximity weight exp(-d^2 / (2 sigma^2)); in (0, 1]."""
    if sigma <= 0:
        raise NonPositiveSigma("sigma must be positive")
    d = np.asarray(distance, np.float64)
    w = np.exp(-(d * d) / (2.0 * sigma * sigma))
    return float(w) if w.ndim == 0 else w


def fit_surrogate(
    masks: np.ndarray,
    probs: np.ndarray,
    weights: np.ndarray,
    ridge_lambda: float,
) -> tuple[float, np.ndarray]:
    """Weighted ridge least squares via normal equations and Cholesky solve.

    Minimizes sum_i w_i (theta0 + theta . mask_i - prob_i)^2
    + ridge_lambda * |theta|^2 with the intercept unpenalized.

    Raises SingularSystem when ridge_lambda = 0 and the weighted design
    matrix is rank-deficient; the caller retries with a positive lambda.
    """
    masks = np.asarray(masks, np.float64)
    probs = np.asarray(probs, np.float64)
    weights = np.asarray(weights, np.float64)
    n, m = masks.shape
    if n < 2:
        raise ValueError("need at least 2 masks to fit a surrogate")
    Z = np.column_stack([np.ones(n), masks])
    WZ = Z * weights[:, None]
    A = Z.T @ WZ
    A[np.arange(1, m + 1), np.arange(1, m + 1)] += ridge_lambda
    b = WZ.T @ probs
    try:
        L = np.linalg.cholesky(A)
    except np.linalg.LinAlgError:
        raise SingularSystem(
            "surrogate design is rank-deficient; retry with ridge_lambda > 0"
        ) from None
    theta = _cho_solve(L, b)
    return float(theta[0]), theta[1:]


def _cho_solve(L: np.ndarray, b: np.ndarray) -> np.ndarray:
    k = L.shape[0]
    z = np.zeros(k)
    for i in range(k):
        z[i] = (b[i] - L[i, :i] @ z[:i]) / L[i, i]
    x = np.zeros(k)
    for i in range(k - 1, -1, -1):
        x[i] = (z[i] - L[i + 1 :, i] @ x[i + 1 :]) / L[i, i]
    return x


def masked_tfidf_matrix(
    doc: ProcessedDoc,
    masks: np.ndarray,
    model: ForestModel,
) -> np.ndarray:
    """Dense TF-IDF rows for each masked variant of the document.

    Dropping a stem drops all its token occurrences; surviving counts are
    weighted by the model's idf table and each row is L2-normalized,
    matching vectorize.transform exactly.
    """
    stems = distinct_stems(doc)
    stem_counts = Counter(doc.stems)
    counts = np.array([stem_counts[s] for s in stems], np.float64)
    vocab_idx = np.array([model.vocab.term_to_index.get(s, -1) for s in stems])
    idf = np.where(vocab_idx >= 0, model.idf[np.maximum(vocab_idx, 0)], 0.0)
    raw = masks * counts * idf
    norms = np.linalg.norm(raw, axis=1)
    norms[norms == 0] = 1.0
    scaled = raw / norms[:, None]
    X = np.zeros((masks.shape[0], model.vocab.size))
    for j, vi in enumerate(vocab_idx):
        if vi >= 0:
            X[:, vi] = scaled[:, j]
    return X


def explain(
    model: ForestModel,
    pp_config: PreprocessConfig,
    requirement: Requirement,
    config: LimeConfig,
) -> Explanation:
    doc = preprocess(requirement, pp_config)
    return explain_document(model, doc, config)


def explain_document(model: ForestModel, doc: ProcessedDoc, config: LimeConfig) -> Explanation:
    if not doc.stems:
        raise EmptyDocument(f"requirement {doc.requirement_id} has no stems")
    stems = distinct_stems(doc)
    masks = perturb(doc, config)
    X = masked_tfidf_matrix(doc, masks, model)
    probs = predict_proba_batch(model, X)[:, 1]
    weights = kernel_weight(mask_distance(masks), config.sigma)
    try:
        intercept, theta = fit_surrogate(masks, probs, weights, config.ridge_lambda)
    except SingularSystem:
        if config.ridge_lambda > 0:
            raise
        intercept, theta = fit_surrogate(masks, probs, weights, _RETRY_LAMBDA)
    ranked = sorted(
        ((s, float(t)) for s, t in zip(stems, theta) if t != 0.0),
        key=lambda item: (-abs(item[1]), item[0]),
    )
    return Explanation(
        requirement_id=doc.requirement_id,
        prob_nfr=float(probs[0]),
        intercept=intercept,
        word_weights=tuple(ranked[: config.top_k]),
    )


def explanation_to_dict(explanation: Explanation) -> dict:
    return {
        "requirement_id": explanation.requirement_id,
        "prob_nfr": explanation.prob_nfr,
        "intercept": explanation.intercept,
        "words": [{"stem": s, "weight": w} for s, w in explanation.word_weights],
    }
