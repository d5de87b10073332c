"""Does picking features by flip rate actually help a classifier?

Score the g1 cube, keep the top four features (zeros are dropped, so only
the three that appear in the formula survive), and cross-validate a softmax
logistic regression on them.  Compare against the same classifier on ten
random four-feature draws.
"""

import numpy as np

from ariselect import (
    EvalConfig,
    MethodId,
    ProtocolConfig,
    SyntheticSpec,
    cv_accuracy,
    generate,
    run_protocol,
    top_k_features,
)

ds = generate(SyntheticSpec(function="g1", dimension=10, range_size=2))
report = run_protocol(
    ds, MethodId.ARI, ProtocolConfig(repetitions=10, fraction=1 / 3, seed=1)
)
chosen = top_k_features(report, 4)
names = [ds.feature_names[f] for f in chosen]

eval_cfg = EvalConfig(k=4, folds=10, seed=5)
selected = cv_accuracy(ds, chosen, eval_cfg)
baseline = cv_accuracy(ds, list(range(ds.n_features)), eval_cfg)

rng = np.random.default_rng(11)
random_accuracies = []
for _ in range(10):
    draw = sorted(int(f) for f in rng.choice(ds.n_features, size=4, replace=False))
    random_accuracies.append(cv_accuracy(ds, draw, eval_cfg))

print(f"selected features: {', '.join(names)} ({len(chosen)} of budget 4 used)")
print(f"accuracy with selected features : {selected:.4f}")
print(f"accuracy with all 10 features   : {baseline:.4f}")
print(f"accuracy with 4 random features : {np.mean(random_accuracies):.4f} "
      f"(mean of 10 draws, min {min(random_accuracies):.4f})")
