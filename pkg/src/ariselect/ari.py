"""Agreement/disagreement machinery and the analogical relevance index.

The index looks at pairs of rows at Hamming distance exactly 1: two rows
that agree everywhere except one feature.  If flipping that single feature
often flips the label, the feature matters; if it never does, the feature is
noise.  Three outcomes are possible per feature:

* ``ratio`` - the fraction of distance-1 pairs whose labels differ, in [0, 1];
* ``zero_variance`` - the column is constant, reported as 0;
* ``redundant`` - the column varies but no distance-1 pair exists, reported
  with the sentinel value 2.  The column can never change alone, which is
  evidence of dependency on another feature (e.g. an exact duplicate column).

Pair mining groups rows by their values on every column except the target
feature (the "masked key"); rows sharing a masked key but differing on the
target are exactly the distance-1 pairs.  Expected cost is O(m*n) per feature
versus O(m^2 * n) for the definitional double loop, which the tests keep as
an independent oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dataset import CategoricalDataset, FeatureId, observed_values
from .errors import LengthMismatchError


@dataclass(frozen=True)
class PairSets:
    """Partition of feature indices by whether two rows agree there."""

    agreement: frozenset[int]
    disagreement: frozenset[int]

    @property
    def hamming_distance(self) -> int:
        return len(self.disagreement)


def pair_sets(a: Sequence[int], b: Sequence[int]) -> PairSets:
    """Split feature indices into agreement and disagreement sets for two rows."""
    if len(a) != len(b):
        raise LengthMismatchError(f"rows have lengths {len(a)} and {len(b)}")
    agree = frozenset(i for i, (x, y) in enumerate(zip(a, b)) if x == y)
    disagree = frozenset(range(len(a))) - agree
    return PairSets(agreement=agree, disagreement=disagree)


@dataclass(frozen=True)
class DistanceOnePairs:
    """All row pairs at Hamming distance exactly 1 differing on one feature.

    ``pairs`` holds unordered row-index pairs ``(a, b)`` with ``a < b``, in
    sorted order.  ``label_equal_count`` counts the pairs whose two rows share
    a label; the remaining pairs are the label-changing ones that make a
    feature relevant.
    """

    feature: FeatureId
    pairs: tuple[tuple[int, int], ...]
    label_equal_count: int

    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    @property
    def label_diff_count(self) -> int:
        return len(self.pairs) - self.label_equal_count


def distance_one_pairs(ds: CategoricalDataset, feature: FeatureId) -> DistanceOnePairs:
    """Mine every unordered row pair that disagrees exactly on ``feature``.

    Rows are bucketed on the masked key (all columns except ``feature``);
    within a bucket, rows with distinct values at ``feature`` pair up.  For a
    categorical range above 2 every cross-value combination counts.
    """
    instances = ds.instances
    m, n = instances.shape
    column = instances[:, feature]
    labels = ds.labels

    if n == 1:
        order = np.arange(m)
        run_starts = np.array([0])
        run_ends = np.array([m])
    else:
        masked = np.delete(instances, feature, axis=1)
        order = np.lexsort(masked.T[::-1])
        changed = np.any(masked[order[1:]] != masked[order[:-1]], axis=1)
        boundaries = np.flatnonzero(changed) + 1
        run_starts = np.concatenate(([0], boundaries))
        run_ends = np.concatenate((boundaries, [m]))

    pairs: list[tuple[int, int]] = []
    equal = 0
    for start, end in zip(run_starts, run_ends):
        if end - start < 2:
            continue
        rows = order[start:end]
        buckets: dict[int, list[int]] = {}
        for r in rows:
            buckets.setdefault(int(column[r]), []).append(int(r))
        if len(buckets) < 2:
            continue
        values = sorted(buckets)
        for vi in range(len(values)):
            for vj in range(vi + 1, len(values)):
                for ra in buckets[values[vi]]:
                    for rb in buckets[values[vj]]:
                        pair = (ra, rb) if ra < rb else (rb, ra)
                        pairs.append(pair)
                        if labels[pair[0]] == labels[pair[1]]:
                            equal += 1
    pairs.sort()
    return DistanceOnePairs(feature=feature, pairs=tuple(pairs), label_equal_count=equal)


class ScoreKind(enum.Enum):
    """Which branch of the index produced a feature's score."""

    RATIO = "ratio"
    ZERO_VARIANCE = "zero_variance"
    REDUNDANT = "redundant"


REDUNDANT_SENTINEL = 2.0
"""Reported value for a varying feature with no distance-1 pairs."""


@dataclass(frozen=True)
class AriScore:
    """Relevance score of one feature; ``value`` is only a ratio for ``RATIO``.

    Sentinels are a distinct ``kind`` rather than bare numbers so nothing
    accidentally averages a 2 into a ratio; serialization still emits 0 and 2
    alongside the kind tag.
    """

    kind: ScoreKind
    value: float

    def __post_init__(self) -> None:
        if self.kind is ScoreKind.RATIO and not 0.0 <= self.value <= 1.0:
            raise ValueError(f"ratio score {self.value} outside [0, 1]")
        if self.kind is ScoreKind.ZERO_VARIANCE and self.value != 0.0:
            raise ValueError("zero-variance score must be 0")
        if self.kind is ScoreKind.REDUNDANT and self.value != REDUNDANT_SENTINEL:
            raise ValueError("redundant score must be the sentinel 2")

    @property
    def is_sentinel(self) -> bool:
        return self.kind is not ScoreKind.RATIO


def ari_score(ds: CategoricalDataset, feature: FeatureId) -> AriScore:
    """Three-branch relevance score for one feature.

    Constant column: 0 (zero variance).  Varying column with no distance-1
    pairs: the redundancy sentinel 2.  Otherwise the fraction of distance-1
    pairs whose labels differ.
    """
    if len(observed_values(ds, feature)) == 1:
        return AriScore(kind=ScoreKind.ZERO_VARIANCE, value=0.0)
    index = distance_one_pairs(ds, feature)
    if index.pair_count == 0:
        return AriScore(kind=ScoreKind.REDUNDANT, value=REDUNDANT_SENTINEL)
    return AriScore(kind=ScoreKind.RATIO, value=index.label_diff_count / index.pair_count)


def ari_all(ds: CategoricalDataset) -> list[AriScore]:
    """Score every feature independently."""
    return [ari_score(ds, i) for i in range(ds.n_features)]


class Relevance(enum.Enum):
    """Qualitative relevance of a feature on a sample."""

    RELEVANT = "relevant"
    IRRELEVANT = "irrelevant"
    UNDETERMINED = "undetermined"


def classify_relevance(ds: CategoricalDataset, feature: FeatureId) -> Relevance:
    """Relevant if some distance-1 pair changes the label, irrelevant if none
    does; undetermined when there are no distance-1 pairs to look at."""
    index = distance_one_pairs(ds, feature)
    if index.pair_count == 0:
        return Relevance.UNDETERMINED
    if index.label_diff_count > 0:
        return Relevance.RELEVANT
    return Relevance.IRRELEVANT
