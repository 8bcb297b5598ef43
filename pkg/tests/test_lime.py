import itertools
import math

import numpy as np
import pytest

from reqlens import lime as lime_mod
from reqlens.corpus import Requirement
from reqlens.errors import EmptyDocument, NonPositiveSigma, SingularSystem
from reqlens.forest import ForestParams, fit
from reqlens.lime import (
    Explanation,
    LimeConfig,
    distinct_stems,
    explain,
    explanation_to_dict,
    fit_surrogate,
    kernel_weight,
    mask_distance,
    masked_tfidf_matrix,
    perturb,
)
from reqlens.preprocess import ProcessedDoc, default_config
from reqlens.vectorize import build_vocabulary, transform


def doc(i, stems):
    return ProcessedDoc(requirement_id=i, stems=tuple(stems), distinct_stems=frozenset(stems))


# ---------------------------------------------------------------- kernel


def test_kernel_closed_forms():
    assert kernel_weight(0.0, 2.5) == pytest.approx(1.0, abs=1e-12)
    for sigma in [0.5, 1.0, 5.0]:
        d = math.sqrt(2) * sigma
        assert kernel_weight(d, sigma) == pytest.approx(math.exp(-1.0), abs=1e-12)
    assert kernel_weight(3.0, 1.0) == pytest.approx(math.exp(-4.5), abs=1e-12)


def test_kernel_monotone_decreasing_and_bounded():
    ds = np.linspace(0, 20, 200)
    w = kernel_weight(ds, 3.0)
    assert np.all(np.diff(w) < 0)
    assert np.all((w > 0) & (w <= 1))


def test_kernel_rejects_bad_sigma():
    with pytest.raises(NonPositiveSigma):
        kernel_weight(1.0, 0.0)
    with pytest.raises(NonPositiveSigma):
        kernel_weight(1.0, -2.0)


# ---------------------------------------------------------------- perturb


def test_perturb_single_stem_doc():
    masks = perturb(doc(0, ["alpha"]), LimeConfig(n_samples=25, seed=1))
    assert masks.shape == (26, 1)
    assert masks[0, 0] == 1.0
    assert np.all(masks[1:] == 0.0)
    assert mask_distance(masks)[1:] == pytest.approx(np.ones(25))


def test_perturb_all_ones_prepended_distance_zero():
    masks = perturb(doc(0, ["a", "b", "c"]), LimeConfig(n_samples=50, seed=3))
    assert masks.shape == (51, 3)
    assert np.all(masks[0] == 1.0)
    assert mask_distance(masks)[0] == 0.0
    # every perturbed row drops between 1 and 3 stems
    dropped = 3 - masks[1:].sum(axis=1)
    assert dropped.min() >= 1 and dropped.max() <= 3


def test_mask_distance_is_sqrt_of_dropped():
    masks = np.array([[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 0.0]])
    assert mask_distance(masks) == pytest.approx([math.sqrt(2), 1.0, math.sqrt(3)])


def test_perturb_deterministic_under_seed():
    d = doc(0, ["a", "b", "c", "d"])
    cfg = LimeConfig(n_samples=40, seed=11)
    assert np.array_equal(perturb(d, cfg), perturb(d, cfg))
    assert not np.array_equal(perturb(d, cfg), perturb(d, LimeConfig(n_samples=40, seed=12)))


def test_perturb_empty_doc_raises():
    with pytest.raises(EmptyDocument):
        perturb(doc(0, []), LimeConfig())


def test_config_validation():
    with pytest.raises(ValueError):
        LimeConfig(n_samples=5)
    with pytest.raises(NonPositiveSigma):
        LimeConfig(sigma=0)
    with pytest.raises(ValueError):
        LimeConfig(top_k=0)
    with pytest.raises(ValueError):
        LimeConfig(ridge_lambda=-1)


# ---------------------------------------------------------------- surrogate


def brute_force_weighted_ridge(masks, y, w, lam):
    """Independent solver: weighted+ridge-augmented least squares via SVD."""
    n, m = masks.shape
    Z = np.column_stack([np.ones(n), masks])
    sw = np.sqrt(w)
    A = Z * sw[:, None]
    b = y * sw
    if lam > 0:
        reg = np.zeros((m, m + 1))
        reg[:, 1:] = np.sqrt(lam) * np.eye(m)
        A = np.vstack([A, reg])
        b = np.concatenate([b, np.zeros(m)])
    theta, *_ = np.linalg.lstsq(A, b, rcond=None)
    return theta[0], theta[1:]


def test_surrogate_hand_solved_two_stem_system():
    masks = np.array(list(itertools.product([0.0, 1.0], repeat=2)))
    y = 2.0 * masks[:, 0] - 1.0 * masks[:, 1] + 0.5
    theta0, theta = fit_surrogate(masks, y, np.ones(4), 0.0)
    assert theta0 == pytest.approx(0.5, abs=1e-8)
    assert theta == pytest.approx([2.0, -1.0], abs=1e-8)


def test_surrogate_constant_black_box():
    masks = np.array(list(itertools.product([0.0, 1.0], repeat=3)))
    y = np.full(8, 0.77)
    theta0, theta = fit_surrogate(masks, y, np.ones(8), 1.0)
    assert theta0 == pytest.approx(0.77, abs=1e-10)
    assert theta == pytest.approx(np.zeros(3), abs=1e-10)


def test_surrogate_weight_scale_invariance():
    # doubling every kernel weight leaves the lambda = 0 solution unchanged
    rng = np.random.default_rng(5)
    masks = rng.integers(0, 2, (30, 4)).astype(float)
    y = rng.random(30)
    w = rng.random(30) + 0.1
    a0, av = fit_surrogate(masks, y, w, 0.0)
    b0, bv = fit_surrogate(masks, y, 2.0 * w, 0.0)
    assert a0 == pytest.approx(b0, abs=1e-9)
    assert av == pytest.approx(bv, abs=1e-9)


def test_surrogate_matches_brute_force_on_randomized_systems():
    rng = np.random.default_rng(17)
    for trial in range(25):
        n = int(rng.integers(6, 40))
        m = int(rng.integers(1, min(n - 1, 8) + 1))
        masks = rng.integers(0, 2, (n, m)).astype(float)
        y = rng.random(n)
        w = rng.random(n) * 2 + 0.05
        lam = float(rng.choice([0.0, 0.1, 1.0, 5.0]))
        try:
            theta0, theta = fit_surrogate(masks, y, w, lam)
        except SingularSystem:
            assert lam == 0.0
            continue
        b0, bv = brute_force_weighted_ridge(masks, y, w, lam)
        assert theta0 == pytest.approx(b0, abs=1e-8)
        assert theta == pytest.approx(bv, abs=1e-8)


def test_surrogate_singular_when_lambda_zero():
    # duplicate columns make the design rank-deficient
    masks = np.array([[1.0, 1.0], [0.0, 0.0], [1.0, 1.0], [0.0, 0.0]])
    with pytest.raises(SingularSystem):
        fit_surrogate(masks, np.array([1.0, 0.0, 1.0, 0.0]), np.ones(4), 0.0)
    # a positive lambda makes the same system solvable
    theta0, theta = fit_surrogate(masks, np.array([1.0, 0.0, 1.0, 0.0]), np.ones(4), 1e-3)
    assert np.isfinite(theta).all()


def test_surrogate_sample_permutation_invariance():
    rng = np.random.default_rng(23)
    masks = rng.integers(0, 2, (40, 5)).astype(float)
    y = rng.random(40)
    w = rng.random(40) + 0.01
    perm = rng.permutation(40)
    a = fit_surrogate(masks, y, w, 0.7)
    b = fit_surrogate(masks[perm], y[perm], w[perm], 0.7)
    assert a[0] == pytest.approx(b[0], abs=1e-10)
    assert a[1] == pytest.approx(b[1], abs=1e-10)


def test_linear_recovery_full_enumeration():
    rng = np.random.default_rng(31)
    for m in [2, 3, 4, 5]:
        masks = np.array(list(itertools.product([0.0, 1.0], repeat=m)))
        true_theta = rng.normal(size=m)
        true_b = rng.normal()
        y = masks @ true_theta + true_b
        w = kernel_weight(mask_distance(masks), sigma=2.0)
        theta0, theta = fit_surrogate(masks, y, w, 0.0)
        assert theta0 == pytest.approx(true_b, abs=1e-6)
        assert theta == pytest.approx(true_theta, abs=1e-6)
        # lambda -> 0 limit behaves identically
        theta0l, thetal = fit_surrogate(masks, y, w, 1e-10)
        assert thetal == pytest.approx(true_theta, abs=1e-6)


# ---------------------------------------------------------------- explain


def train_toy_model():
    texts = [
        ("The system shall display the account balance.", "F"),
        ("The system shall allow the user to delete a record.", "F"),
        ("Users shall be able to update their profile.", "F"),
        ("The system shall print monthly reports.", "F"),
        ("The product shall be available 99 percent of the time.", "A"),
        ("The response time shall be under 2 seconds.", "PE"),
        ("The system shall encrypt all passwords.", "SE"),
        ("All screens must load within 3 seconds.", "PE"),
    ]
    reqs = [Requirement(id=i, text=t, raw_label=lab) for i, (t, lab) in enumerate(texts)]
    cfg = default_config("A")
    from reqlens.pipeline import train_pipeline

    pipeline = train_pipeline(reqs, cfg, ForestParams(n_trees=30, seed=7))
    return reqs, cfg, pipeline.model


def test_explain_deterministic():
    reqs, cfg, model = train_toy_model()
    lime_cfg = LimeConfig(n_samples=150, seed=4)
    a = explain(model, cfg, reqs[5], lime_cfg)
    b = explain(model, cfg, reqs[5], lime_cfg)
    assert a == b


def test_explain_sign_partition_within_doc_stems():
    reqs, cfg, model = train_toy_model()
    exp = explain(model, cfg, reqs[4], LimeConfig(n_samples=200, seed=9))
    from reqlens.preprocess import preprocess

    stems = preprocess(reqs[4], cfg).distinct_stems
    assert set(exp.supportive()) <= stems
    assert set(exp.distractive()) <= stems
    assert not set(exp.supportive()) & set(exp.distractive())
    assert len(exp.word_weights) <= 10
    weights = [abs(w) for _, w in exp.word_weights]
    assert weights == sorted(weights, reverse=True)


def test_explain_empty_doc_raises():
    reqs, cfg, model = train_toy_model()
    bad = Requirement(id=99, text="2 3 4 5", raw_label="F")
    with pytest.raises(EmptyDocument):
        explain(model, cfg, bad, LimeConfig())


def test_explain_recovers_linear_black_box(monkeypatch):
    """With the classifier replaced by a linear function of stem presence,
    the top-weighted stem must be the one with the largest coefficient."""
    reqs, cfg, model = train_toy_model()
    req = reqs[1]
    from reqlens.preprocess import preprocess

    stems = distinct_stems(preprocess(req, cfg))
    coef = {s: 0.0 for s in stems}
    coef[stems[2]] = 0.45
    coef[stems[0]] = -0.2
    idx_of = {model.vocab.term_to_index[s]: s for s in stems if s in model.vocab.term_to_index}

    def linear_predict(_model, X):
        p = np.full(X.shape[0], 0.4)
        for col, s in idx_of.items():
            p += coef[s] * (X[:, col] > 0)
        return np.column_stack([1 - p, p])

    monkeypatch.setattr(lime_mod, "predict_proba_batch", linear_predict)
    exp = lime_mod.explain(model, cfg, req, LimeConfig(n_samples=600, seed=2, ridge_lambda=1e-6))
    assert exp.word_weights[0][0] == stems[2]
    assert exp.word_weights[0][1] > 0
    signs = dict(exp.word_weights)
    assert signs.get(stems[0], 0.0) < 0


def test_masked_matrix_row0_matches_transform():
    reqs, cfg, model = train_toy_model()
    from reqlens.preprocess import preprocess

    d = preprocess(reqs[3], cfg)
    masks = perturb(d, LimeConfig(n_samples=20, seed=0))
    X = masked_tfidf_matrix(d, masks, model)
    from reqlens.vectorize import to_dense

    assert X[0] == pytest.approx(to_dense(transform(d, model.vocab), model.vocab.size), abs=1e-12)
    # rows are unit norm or zero
    norms = np.linalg.norm(X, axis=1)
    assert np.all((np.abs(norms - 1) < 1e-12) | (norms == 0))


def test_explanation_serialization():
    exp = Explanation(requirement_id=4, prob_nfr=0.92, intercept=0.5, word_weights=(("avail", 0.3), ("time", -0.1)))
    data = explanation_to_dict(exp)
    assert data["requirement_id"] == 4
    assert data["words"][0] == {"stem": "avail", "weight": 0.3}
