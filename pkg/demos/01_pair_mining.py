"""Walk through the pair-mining machinery on a six-row toy table.

Two rows at Hamming distance 1 differ at exactly one feature.  Collecting
all such pairs per feature, then asking how often the label flips across a
pair, is the whole scoring idea: a flip rate near 1 means the feature alone
moves the label, near 0 means it never does, and the two degenerate
outcomes (no variance, no pairs) get their own kinds.
"""

import numpy as np

from ariselect import (
    CategoricalDataset,
    ari_score,
    classify_relevance,
    distance_one_pairs,
    pair_sets,
)

rows = np.array(
    [
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [1, 1, 0],
        [0, 0, 1],
        [1, 0, 1],
    ]
)
labels = np.array([0, 1, 0, 1, 0, 1])  # label follows the first column

ds = CategoricalDataset(
    instances=rows,
    labels=labels,
    feature_names=("a", "b", "c"),
    feature_domains=(("0", "1"), ("0", "1"), ("0", "1")),
    label_domain=("no", "yes"),
    label_name="outcome",
)

print("agreement/disagreement of rows 0 and 3:")
ps = pair_sets(rows[0], rows[3])
print(f"  agree on {sorted(ps.agreement)}, differ on {sorted(ps.disagreement)}, "
      f"Hamming distance {ps.hamming_distance}")

print("\ndistance-1 pairs per feature:")
for i, name in enumerate(ds.feature_names):
    mined = distance_one_pairs(ds, i)
    print(f"  {name}: pairs={list(mined.pairs)}  label flips={mined.label_diff_count}")

print("\nscores and relevance:")
for i, name in enumerate(ds.feature_names):
    score = ari_score(ds, i)
    relevance = classify_relevance(ds, i)
    print(f"  {name}: kind={score.kind.value:<13} value={score.value:.2f}  -> {relevance.value}")

print("\nduplicating column a kills its pairs (nothing varies a alone):")
dup = CategoricalDataset(
    instances=np.hstack([rows, rows[:, [0]]]),
    labels=labels,
    feature_names=("a", "b", "c", "a_copy"),
    feature_domains=(("0", "1"),) * 4,
    label_domain=("no", "yes"),
    label_name="outcome",
)
for i in (0, 3):
    score = ari_score(dup, i)
    print(f"  {dup.feature_names[i]}: kind={score.kind.value} value={score.value}")
