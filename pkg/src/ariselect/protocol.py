"""Repeated-subsampling experiment loop and the sample-size sweep.

A protocol run draws ``repetitions`` independent subsamples of a dataset,
scores every feature on each subsample, averages the per-feature scores, and
optionally sum-normalizes the averages so they add up to 1.

Ratio scores are the only values averaged.  A feature that comes back
zero_variance or redundant in any repetition keeps a sticky flag in the
report, its sentinel repetitions contribute nothing to the average, and a
flagged feature is left out of normalization entirely.  When every repetition
was a sentinel the reported raw mean falls back to 2.0 (redundant seen) or
0.0 (zero variance only) so the report stays total.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .ari import REDUNDANT_SENTINEL, ScoreKind, ari_all
from .baselines import (
    DEFAULT_RELIEF_NEIGHBORS,
    MethodId,
    chi2_scores,
    mi_scores,
    relief_scores,
)
from .dataset import CategoricalDataset, subsample
from .errors import NoScorableFeatureError
from .synthetic import SyntheticSpec, generate

FLAG_ZERO_VARIANCE = "zero_variance"
FLAG_REDUNDANT = "redundant"


@dataclass(frozen=True)
class ProtocolConfig:
    """Settings of one protocol run.

    Exactly one of ``fraction`` (share of the dataset, in (0, 1]) and
    ``absolute`` (row count) fixes the subsample size; with neither given the
    fraction defaults to 1.0, which scores the whole dataset.
    """

    repetitions: int = 10
    fraction: float | None = None
    absolute: int | None = None
    seed: int = 0
    normalize: bool = True
    relief_neighbors: int = DEFAULT_RELIEF_NEIGHBORS

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.fraction is not None and self.absolute is not None:
            raise ValueError("give fraction or absolute, not both")
        if self.fraction is None and self.absolute is None:
            object.__setattr__(self, "fraction", 1.0)
        if self.fraction is not None and not 0.0 < self.fraction <= 1.0:
            raise ValueError(f"fraction must lie in (0, 1], got {self.fraction}")
        if self.absolute is not None and self.absolute < 1:
            raise ValueError(f"absolute sample size must be >= 1, got {self.absolute}")
        if self.relief_neighbors < 1:
            raise ValueError(f"relief_neighbors must be >= 1, got {self.relief_neighbors}")

    def resolve_size(self, n_rows: int) -> int:
        """Subsample row count for a dataset of ``n_rows`` rows."""
        if self.absolute is not None:
            return self.absolute
        return min(n_rows, max(1, round(self.fraction * n_rows)))


@dataclass(frozen=True)
class FeatureScore:
    """Aggregated result for one feature.

    ``raw_mean`` is the mean of the ratio-kind repetition scores (for methods
    without sentinels, of all repetition scores).  ``normalized`` is absent
    for flagged features and when normalization is off.  The counts record
    how many repetitions produced each outcome.
    """

    feature: int
    name: str
    raw_mean: float
    normalized: float | None
    flags: frozenset[str]
    ratio_count: int
    zero_variance_count: int
    redundant_count: int


@dataclass(frozen=True)
class ScoreReport:
    """Per-feature aggregate scores of one method under one config."""

    method: MethodId
    scores: tuple[FeatureScore, ...]
    config: ProtocolConfig
    sample_size: int

    @property
    def repetitions(self) -> int:
        return self.config.repetitions

    @property
    def redundant_fraction(self) -> float:
        """Share of features carrying the redundant flag."""
        flagged = sum(1 for s in self.scores if FLAG_REDUNDANT in s.flags)
        return flagged / len(self.scores)

    def raw_means(self) -> np.ndarray:
        return np.array([s.raw_mean for s in self.scores], dtype=np.float64)

    def normalized_values(self) -> np.ndarray:
        """Normalized scores with NaN at flagged/absent positions."""
        return np.array(
            [np.nan if s.normalized is None else s.normalized for s in self.scores],
            dtype=np.float64,
        )


def _score_once(
    ds: CategoricalDataset, method: MethodId, relief_neighbors: int
) -> tuple[np.ndarray, list[ScoreKind] | None]:
    if method is MethodId.ARI:
        scored = ari_all(ds)
        values = np.array([s.value for s in scored], dtype=np.float64)
        return values, [s.kind for s in scored]
    if method is MethodId.CHI2:
        return chi2_scores(ds), None
    if method is MethodId.MI:
        return mi_scores(ds), None
    if method is MethodId.RELIEF:
        return relief_scores(ds, relief_neighbors), None
    raise ValueError(f"unknown method {method!r}")


def _aggregate(
    values: np.ndarray,
    kinds: list[list[ScoreKind]] | None,
    names: Sequence[str],
    normalize: bool,
) -> tuple[FeatureScore, ...]:
    """Fold per-repetition scores into per-feature aggregates.

    ``values`` has one row per repetition.  ``kinds`` mirrors its shape for
    sentinel-aware methods and is None otherwise.
    """
    reps, n = values.shape
    if kinds is None:
        ratio_counts = np.full(n, reps)
        zero_var_counts = np.zeros(n, dtype=int)
        redundant_counts = np.zeros(n, dtype=int)
        raw_means = values.mean(axis=0)
    else:
        kind_grid = np.array([[k for k in row] for row in kinds], dtype=object)
        ratio_mask = kind_grid == ScoreKind.RATIO
        ratio_counts = ratio_mask.sum(axis=0)
        zero_var_counts = (kind_grid == ScoreKind.ZERO_VARIANCE).sum(axis=0)
        redundant_counts = (kind_grid == ScoreKind.REDUNDANT).sum(axis=0)
        sums = np.where(ratio_mask, values, 0.0).sum(axis=0)
        raw_means = np.where(
            ratio_counts > 0,
            sums / np.maximum(ratio_counts, 1),
            np.where(redundant_counts > 0, REDUNDANT_SENTINEL, 0.0),
        )

    flags = [
        frozenset(
            ([FLAG_ZERO_VARIANCE] if zero_var_counts[i] else [])
            + ([FLAG_REDUNDANT] if redundant_counts[i] else [])
        )
        for i in range(n)
    ]
    eligible = np.array([not f for f in flags])

    normalized: list[float | None] = [None] * n
    if normalize:
        if not eligible.any():
            raise NoScorableFeatureError(
                "every feature was flagged in some repetition; nothing to normalize"
            )
        contrib = np.maximum(raw_means, 0.0)
        denom = contrib[eligible].sum()
        for i in range(n):
            if eligible[i]:
                normalized[i] = float(contrib[i] / denom) if denom > 0 else 0.0

    return tuple(
        FeatureScore(
            feature=i,
            name=names[i],
            raw_mean=float(raw_means[i]),
            normalized=normalized[i],
            flags=flags[i],
            ratio_count=int(ratio_counts[i]),
            zero_variance_count=int(zero_var_counts[i]),
            redundant_count=int(redundant_counts[i]),
        )
        for i in range(n)
    )


def run_protocol(
    ds: CategoricalDataset, method: MethodId, cfg: ProtocolConfig
) -> ScoreReport:
    """Score features over repeated subsamples and aggregate.

    Repetition t draws its subsample with seed ``cfg.seed + t`` (t starting
    at 1), so any repetition can be reproduced on its own.  A subsample of
    the full row count skips resampling and scores the dataset as-is.
    """
    method = MethodId(method)
    size = cfg.resolve_size(ds.n_rows)
    values = np.empty((cfg.repetitions, ds.n_features), dtype=np.float64)
    kinds: list[list[ScoreKind]] | None = [] if method is MethodId.ARI else None
    for t in range(1, cfg.repetitions + 1):
        sub = ds if size == ds.n_rows else subsample(ds, size, cfg.seed + t)
        row, row_kinds = _score_once(sub, method, cfg.relief_neighbors)
        values[t - 1] = row
        if kinds is not None:
            kinds.append(row_kinds)
    scores = _aggregate(values, kinds, ds.feature_names, cfg.normalize)
    return ScoreReport(method=method, scores=scores, config=cfg, sample_size=size)


def dimensionality_sweep(
    template: SyntheticSpec,
    sizes: Sequence[int],
    cfg: ProtocolConfig,
    method: MethodId = MethodId.ARI,
) -> list[ScoreReport]:
    """One protocol-style report per sample size drawn from a universe.

    Unlike run_protocol, each repetition here generates a fresh uniform
    sample of the template's value universe, so sample sizes may exceed any
    materialized dataset.  The seed of repetition t at sizes[j] is
    ``cfg.seed + j * repetitions + t``, keeping every (size, repetition)
    pair independently reproducible.
    """
    if not sizes:
        raise ValueError("sizes must be nonempty")
    method = MethodId(method)
    reports = []
    for j, size in enumerate(sizes):
        values = np.empty((cfg.repetitions, template.dimension), dtype=np.float64)
        kinds: list[list[ScoreKind]] | None = [] if method is MethodId.ARI else None
        names: Sequence[str] = ()
        for t in range(1, cfg.repetitions + 1):
            spec = replace(
                template,
                sample_size=size,
                seed=cfg.seed + j * cfg.repetitions + t,
            )
            sample = generate(spec)
            names = sample.feature_names
            row, row_kinds = _score_once(sample, method, cfg.relief_neighbors)
            values[t - 1] = row
            if kinds is not None:
                kinds.append(row_kinds)
        scores = _aggregate(values, kinds, names, cfg.normalize)
        reports.append(
            ScoreReport(
                method=method,
                scores=scores,
                config=replace(cfg, fraction=None, absolute=size),
                sample_size=size,
            )
        )
    return reports
