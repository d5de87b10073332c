import math

import numpy as np
import pytest
from scipy.stats import chi2_contingency
from sklearn.metrics import mutual_info_score

from ariselect import (
    MethodId,
    SyntheticSpec,
    chi2_scores,
    generate,
    mi_scores,
    relief_scores,
)

from .oracles import build_dataset


def random_dataset(seed, m=60, n=4, r=3):
    rng = np.random.default_rng(seed)
    return build_dataset(rng.integers(0, r, size=(m, n)), rng.integers(0, 2, size=m), r)


class TestMethodId:
    def test_values(self):
        assert {m.value for m in MethodId} == {"ari", "chi2", "mi", "relief"}

    def test_lookup_by_string(self):
        assert MethodId("chi2") is MethodId.CHI2


class TestChiSquare:
    def test_matches_scipy_on_random_data(self):
        for seed in range(10):
            ds = random_dataset(seed)
            ours = chi2_scores(ds)
            for i in range(ds.n_features):
                table = np.zeros((3, 2))
                for row, lab in zip(ds.instances[:, i], ds.labels):
                    table[row, lab] += 1
                table = table[table.sum(axis=1) > 0][:, table.sum(axis=0) > 0]
                if 1 in table.shape:
                    expected = 0.0
                else:
                    expected = chi2_contingency(table, correction=False).statistic
                assert ours[i] == pytest.approx(expected, rel=1e-10, abs=1e-12)

    def test_feature_equal_to_balanced_label_scores_m(self):
        y = np.array([0, 1] * 8)
        ds = build_dataset(y[:, None], y, range_size=2)
        assert chi2_scores(ds)[0] == pytest.approx(16.0)

    def test_zero_variance_scores_zero(self):
        ds = build_dataset([[0, 1], [0, 0]], [0, 1], range_size=2)
        assert chi2_scores(ds)[0] == 0.0

    def test_nonnegative(self):
        for seed in range(5):
            assert (chi2_scores(random_dataset(seed)) >= 0).all()


class TestMutualInformation:
    def test_matches_sklearn_on_random_data(self):
        for seed in range(10):
            ds = random_dataset(seed)
            ours = mi_scores(ds)
            for i in range(ds.n_features):
                expected = mutual_info_score(ds.instances[:, i], ds.labels)
                assert ours[i] == pytest.approx(expected, rel=1e-10, abs=1e-12)

    def test_feature_equal_to_balanced_label_gives_ln2(self):
        y = np.array([0, 1] * 10)
        ds = build_dataset(y[:, None], y, range_size=2)
        assert mi_scores(ds)[0] == pytest.approx(math.log(2.0))

    def test_zero_variance_scores_zero(self):
        ds = build_dataset([[0, 1], [0, 0]], [0, 1], range_size=2)
        assert mi_scores(ds)[0] == 0.0

    def test_nonnegative(self):
        for seed in range(5):
            assert (mi_scores(random_dataset(seed)) >= 0).all()

    def test_row_permutation_invariance(self):
        ds = random_dataset(3)
        perm = np.random.default_rng(1).permutation(ds.n_rows)
        shuffled = build_dataset(ds.instances[perm], ds.labels[perm], 3)
        assert np.allclose(mi_scores(ds), mi_scores(shuffled))
        assert np.allclose(chi2_scores(ds), chi2_scores(shuffled))


class TestRelief:
    def test_hand_computed_two_feature_case(self):
        # Feature 0 equals the label, feature 1 is its complement's noise:
        # with k=1 every hit agrees on feature 0 and differs on feature 1,
        # every miss differs on feature 0 and agrees on feature 1.
        ds = build_dataset(
            [[0, 0], [0, 1], [1, 0], [1, 1]], [0, 0, 1, 1], range_size=2
        )
        weights = relief_scores(ds, k_neighbors=1)
        assert weights[0] == pytest.approx(1.0)
        assert weights[1] == pytest.approx(-1.0)

    def test_single_class_ties_break_to_lowest_index(self):
        ds = build_dataset([[0, 0], [0, 1], [1, 0]], [0, 0, 0], range_size=2)
        weights = relief_scores(ds, k_neighbors=1)
        assert weights[0] == pytest.approx(-1.0 / 3.0)
        assert weights[1] == pytest.approx(-2.0 / 3.0)

    def test_weights_within_bounds(self):
        import warnings

        for seed in range(6):
            ds = random_dataset(seed, m=40)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                weights = relief_scores(ds, k_neighbors=5)
            assert (weights >= -1.0 - 1e-12).all()
            assert (weights <= 1.0 + 1e-12).all()

    def test_clamps_small_classes_with_warning(self):
        ds = build_dataset([[0, 0], [1, 1], [0, 1]], [0, 0, 1], range_size=2)
        with pytest.warns(RuntimeWarning):
            weights = relief_scores(ds, k_neighbors=10)
        assert np.isfinite(weights).all()

    def test_relevant_features_outrank_noise_on_xor(self):
        ds = generate(SyntheticSpec(function="g2", dimension=6, range_size=2))
        weights = relief_scores(ds, k_neighbors=10)
        assert min(weights[0], weights[1]) > max(weights[2:])

    def test_invalid_k_rejected(self):
        ds = random_dataset(0)
        with pytest.raises(ValueError):
            relief_scores(ds, k_neighbors=0)
