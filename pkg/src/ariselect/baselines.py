"""Comparison feature scorers: chi-square, mutual information, ReliefF.

All three operate on encoded categorical datasets and return one score per
feature.  Chi-square and mutual information are contingency-table statistics;
ReliefF is the neighborhood-based weighting scheme for multi-class data with
the 0/1 value-mismatch diff and Hamming-distance neighbors.
"""

from __future__ import annotations

import warnings
from enum import Enum

import numpy as np

from .dataset import CategoricalDataset

DEFAULT_RELIEF_NEIGHBORS = 10


class MethodId(str, Enum):
    """Identifier of a feature scoring method."""

    ARI = "ari"
    CHI2 = "chi2"
    MI = "mi"
    RELIEF = "relief"


def _contingency(ds: CategoricalDataset, feature: int) -> np.ndarray:
    """Observed counts, rows indexed by feature code and columns by label."""
    n_values = len(ds.feature_domains[feature])
    n_labels = len(ds.label_domain)
    flat = ds.instances[:, feature] * n_labels + ds.labels
    counts = np.bincount(flat, minlength=n_values * n_labels)
    return counts.reshape(n_values, n_labels).astype(np.float64)


def chi2_scores(ds: CategoricalDataset) -> np.ndarray:
    """Chi-square statistic of each feature against the label.

    Sum of (observed - expected)^2 / expected over contingency cells whose
    expected count is positive.  Zero-variance features score exactly 0.
    """
    out = np.zeros(ds.n_features, dtype=np.float64)
    for i in range(ds.n_features):
        observed = _contingency(ds, i)
        row_totals = observed.sum(axis=1, keepdims=True)
        col_totals = observed.sum(axis=0, keepdims=True)
        expected = row_totals * col_totals / ds.n_rows
        mask = expected > 0
        out[i] = (((observed - expected) ** 2)[mask] / expected[mask]).sum()
    return out


def mi_scores(ds: CategoricalDataset) -> np.ndarray:
    """Empirical mutual information of each feature with the label, in nats.

    I(X; Y) = sum over (x, y) of p(x, y) * ln(p(x, y) / (p(x) p(y))), with
    0 * ln 0 = 0.  Zero-variance features score exactly 0.
    """
    out = np.zeros(ds.n_features, dtype=np.float64)
    for i in range(ds.n_features):
        joint = _contingency(ds, i) / ds.n_rows
        px = joint.sum(axis=1, keepdims=True)
        py = joint.sum(axis=0, keepdims=True)
        mask = joint > 0
        out[i] = (joint[mask] * np.log(joint[mask] / (px * py)[mask])).sum()
    # Clip the tiny negatives that float cancellation can leave behind.
    return np.where(np.abs(out) < 1e-15, 0.0, out)


def relief_scores(
    ds: CategoricalDataset, k_neighbors: int = DEFAULT_RELIEF_NEIGHBORS
) -> np.ndarray:
    """ReliefF weights per feature, each in [-1, 1].

    Every row serves as an anchor.  For an anchor of class c the k nearest
    same-class rows (hits) and, for every other class C, the k nearest rows
    of class C (misses) are found under Hamming distance, ties broken by
    lowest row index.  Per-feature updates: hits subtract diff / (m * k_used),
    misses add P(C) / (1 - P(c)) * diff / (m * k_C).  When a class has fewer
    rows than requested, k is clamped to what exists.
    """
    if k_neighbors < 1:
        raise ValueError(f"k_neighbors must be >= 1, got {k_neighbors}")
    X = ds.instances
    y = ds.labels
    m = ds.n_rows
    classes, class_counts = np.unique(y, return_counts=True)
    priors = class_counts / m
    class_rows = {c: np.flatnonzero(y == c) for c in classes}

    short = [int(c) for c, cnt in zip(classes, class_counts) if cnt - 1 < k_neighbors]
    if short:
        warnings.warn(
            f"classes {short} have fewer than k_neighbors={k_neighbors} "
            "neighbors available; using all that exist",
            RuntimeWarning,
            stacklevel=2,
        )

    weights = np.zeros(ds.n_features, dtype=np.float64)
    for a in range(m):
        anchor_class = y[a]
        prior_a = priors[classes == anchor_class][0]
        distances = np.count_nonzero(X != X[a], axis=1)
        for c in classes:
            rows = class_rows[c]
            if c == anchor_class:
                rows = rows[rows != a]
            if rows.size == 0:
                continue
            k_used = min(k_neighbors, rows.size)
            # Stable sort over rows already in index order: ties fall to the
            # lowest row index.
            nearest = rows[np.argsort(distances[rows], kind="stable")[:k_used]]
            diff_sum = (X[nearest] != X[a]).sum(axis=0)
            if c == anchor_class:
                weights -= diff_sum / (m * k_used)
            elif prior_a < 1.0:
                prior_c = priors[classes == c][0]
                weights += (prior_c / (1.0 - prior_a)) * diff_sum / (m * k_used)
    return weights
