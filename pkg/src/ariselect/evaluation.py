"""Downstream accuracy evaluation with a from-scratch softmax classifier.

A scored report picks the top-k features, the selected categorical columns
are one-hot encoded, and a multinomial logistic regression (softmax with
cross-entropy loss, L2 penalty on everything but the bias, full-batch
gradient descent) is cross-validated on stratified folds.  Everything is
deterministic given the config seed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .dataset import CategoricalDataset, FeatureId
from .errors import EmptySelectionError
from .protocol import FLAG_REDUNDANT, ScoreReport


@dataclass(frozen=True)
class LogisticRegressionConfig:
    """Hyperparameters of the softmax classifier."""

    l2_strength: float = 1e-3
    learning_rate: float = 0.1
    max_iterations: int = 500

    def __post_init__(self) -> None:
        if self.l2_strength < 0:
            raise ValueError(f"l2_strength must be >= 0, got {self.l2_strength}")
        if self.learning_rate <= 0:
            raise ValueError(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass(frozen=True)
class EvalConfig:
    """Cross-validation settings."""

    k: int = 4
    folds: int = 10
    classifier: LogisticRegressionConfig = field(default_factory=LogisticRegressionConfig)
    seed: int = 0
    stratified: bool = True

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.folds < 2:
            raise ValueError(f"folds must be >= 2, got {self.folds}")


def top_k_features(report: ScoreReport, k: int) -> list[FeatureId]:
    """Features with the k largest scores, zeros dropped.

    Redundant-flagged features never enter the ranking.  Ranking uses the
    normalized scores when the report has them, raw means otherwise; ties go
    to the lower feature index.  Features scoring exactly 0 are removed after
    truncation, so fewer than k features may come back.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    candidates = []
    for s in report.scores:
        if FLAG_REDUNDANT in s.flags:
            continue
        value = s.raw_mean if s.normalized is None else s.normalized
        candidates.append((s.feature, value))
    candidates.sort(key=lambda fv: (-fv[1], fv[0]))
    chosen = [f for f, value in candidates[:k] if value != 0.0]
    if not chosen:
        raise EmptySelectionError(
            "no feature survives selection; all candidates scored 0 or were flagged"
        )
    return chosen


def one_hot_encode(ds: CategoricalDataset, features: list[FeatureId]) -> np.ndarray:
    """Binary design matrix of the selected columns, one block per feature.

    Block widths follow the declared feature domains, so any two subsets of
    the same dataset encode compatibly.
    """
    if not features:
        raise EmptySelectionError("cannot encode an empty feature set")
    blocks = []
    for f in features:
        width = len(ds.feature_domains[f])
        block = np.zeros((ds.n_rows, width), dtype=np.float64)
        block[np.arange(ds.n_rows), ds.instances[:, f]] = 1.0
        blocks.append(block)
    return np.hstack(blocks)


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    exps = np.exp(shifted)
    return exps / exps.sum(axis=1, keepdims=True)


def loss_value(
    weights: np.ndarray, X: np.ndarray, labels: np.ndarray, l2_strength: float
) -> float:
    """Mean cross-entropy plus L2 penalty.

    ``X`` must already carry its trailing all-ones bias column; the matching
    final row of ``weights`` is the bias and stays out of the penalty.
    """
    probs = _softmax(X @ weights)
    picked = probs[np.arange(X.shape[0]), labels]
    data_term = -np.log(np.maximum(picked, 1e-300)).mean()
    penalty = 0.5 * l2_strength * float((weights[:-1] ** 2).sum())
    return float(data_term + penalty)


def loss_gradient(
    weights: np.ndarray, X: np.ndarray, labels: np.ndarray, l2_strength: float
) -> np.ndarray:
    """Exact gradient of loss_value with respect to the weights."""
    m = X.shape[0]
    probs = _softmax(X @ weights)
    probs[np.arange(m), labels] -= 1.0
    grad = X.T @ probs / m
    grad[:-1] += l2_strength * weights[:-1]
    return grad


def fit_softmax(
    X: np.ndarray, labels: np.ndarray, n_classes: int, cfg: LogisticRegressionConfig
) -> np.ndarray:
    """Train by full-batch gradient descent from zero weights.

    ``X`` is the raw design matrix; the bias column is appended here.
    Returns the (d+1, n_classes) weight matrix, bias row last.
    """
    Xb = np.hstack([X, np.ones((X.shape[0], 1))])
    weights = np.zeros((Xb.shape[1], n_classes), dtype=np.float64)
    for _ in range(cfg.max_iterations):
        weights = weights - cfg.learning_rate * loss_gradient(
            weights, Xb, labels, cfg.l2_strength
        )
    return weights


def predict_labels(weights: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Most probable class per row; ties resolve to the lowest class code."""
    Xb = np.hstack([X, np.ones((X.shape[0], 1))])
    return np.argmax(Xb @ weights, axis=1)


def _fold_assignments(labels: np.ndarray, folds: int, seed: int, stratified: bool) -> list[np.ndarray]:
    """Row indices of each fold, shuffled by seed.

    Stratified dealing spreads every class across folds; a class smaller
    than the fold count forces plain shuffled splitting instead.
    """
    rng = np.random.default_rng(seed)
    m = labels.shape[0]
    if stratified:
        _, counts = np.unique(labels, return_counts=True)
        if counts.min() < folds:
            warnings.warn(
                f"a class has fewer than folds={folds} rows; "
                "falling back to non-stratified folds",
                RuntimeWarning,
                stacklevel=3,
            )
            stratified = False
    if not stratified:
        order = rng.permutation(m)
        return [np.sort(part) for part in np.array_split(order, folds)]
    bins: list[list[int]] = [[] for _ in range(folds)]
    for c in np.unique(labels):
        rows = np.flatnonzero(labels == c)
        rng.shuffle(rows)
        for pos, row in enumerate(rows):
            bins[pos % folds].append(int(row))
    return [np.array(sorted(b), dtype=np.int64) for b in bins]


def cv_accuracy(
    ds: CategoricalDataset, features: list[FeatureId], cfg: EvalConfig
) -> float:
    """Mean test accuracy of the classifier over k-fold cross-validation."""
    if not features:
        raise EmptySelectionError("cv_accuracy needs at least one feature")
    if cfg.folds > ds.n_rows:
        raise ValueError(f"folds={cfg.folds} exceeds the {ds.n_rows} dataset rows")
    X = one_hot_encode(ds, features)
    y = ds.labels
    n_classes = len(ds.label_domain)
    fold_rows = _fold_assignments(y, cfg.folds, cfg.seed, cfg.stratified)
    accuracies = []
    for rows in fold_rows:
        if rows.size == 0:
            continue
        train_mask = np.ones(ds.n_rows, dtype=bool)
        train_mask[rows] = False
        weights = fit_softmax(X[train_mask], y[train_mask], n_classes, cfg.classifier)
        predicted = predict_labels(weights, X[rows])
        accuracies.append(float((predicted == y[rows]).mean()))
    return float(np.mean(accuracies))
