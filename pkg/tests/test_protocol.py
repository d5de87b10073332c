import numpy as np
import pytest

from ariselect import (
    FLAG_REDUNDANT,
    FLAG_ZERO_VARIANCE,
    MethodId,
    NoScorableFeatureError,
    ProtocolConfig,
    SyntheticSpec,
    ari_all,
    dimensionality_sweep,
    generate,
    run_protocol,
)

from .oracles import build_dataset


class TestProtocolConfig:
    def test_defaults(self):
        cfg = ProtocolConfig()
        assert cfg.repetitions == 10
        assert cfg.fraction == 1.0
        assert cfg.normalize is True

    def test_fraction_and_absolute_exclusive(self):
        with pytest.raises(ValueError):
            ProtocolConfig(fraction=0.5, absolute=10)

    def test_invalid_values_rejected(self):
        with pytest.raises(ValueError):
            ProtocolConfig(repetitions=0)
        with pytest.raises(ValueError):
            ProtocolConfig(fraction=0.0)
        with pytest.raises(ValueError):
            ProtocolConfig(fraction=1.5)
        with pytest.raises(ValueError):
            ProtocolConfig(absolute=0)

    def test_resolve_size(self):
        assert ProtocolConfig(fraction=1 / 3).resolve_size(1024) == 341
        assert ProtocolConfig(absolute=200).resolve_size(1024) == 200
        assert ProtocolConfig(fraction=0.001).resolve_size(100) == 1


class TestRunProtocol:
    def test_degenerate_run_equals_single_pass(self):
        ds = generate(SyntheticSpec(function="g6", dimension=8, range_size=2))
        cfg = ProtocolConfig(repetitions=1, fraction=1.0, normalize=False)
        report = run_protocol(ds, MethodId.ARI, cfg)
        assert report.raw_means().tolist() == [s.value for s in ari_all(ds)]
        assert all(s.normalized is None for s in report.scores)

    def test_normalized_scores_sum_to_one(self):
        ds = generate(SyntheticSpec(function="g1", dimension=10, range_size=2))
        for method in MethodId:
            cfg = ProtocolConfig(repetitions=5, fraction=1 / 3, seed=2)
            report = run_protocol(ds, method, cfg)
            values = [s.normalized for s in report.scores if s.normalized is not None]
            assert sum(values) == pytest.approx(1.0, abs=1e-9)
            assert all(0.0 <= v <= 1.0 for v in values)

    def test_deterministic_reports(self):
        ds = generate(SyntheticSpec(function="g3", dimension=9, range_size=2))
        cfg = ProtocolConfig(repetitions=4, fraction=0.4, seed=11)
        assert run_protocol(ds, MethodId.ARI, cfg) == run_protocol(ds, MethodId.ARI, cfg)

    def test_sticky_redundant_flag_and_exclusion(self):
        # Column 2 duplicates column 1: redundant in every subsample.
        base = generate(SyntheticSpec(function="g2", dimension=4, range_size=2))
        instances = np.hstack([base.instances, base.instances[:, [1]]])
        ds = build_dataset(instances, base.labels, range_size=2)
        cfg = ProtocolConfig(repetitions=3, fraction=0.5, seed=1)
        report = run_protocol(ds, MethodId.ARI, cfg)
        dup = report.scores[4]
        assert FLAG_REDUNDANT in dup.flags
        assert dup.normalized is None
        assert dup.raw_mean == 2.0
        assert dup.redundant_count == 3
        unflagged = [s.normalized for s in report.scores if s.normalized is not None]
        assert sum(unflagged) == pytest.approx(1.0, abs=1e-9)
        assert report.redundant_fraction == pytest.approx(2 / 5)

    def test_zero_variance_flag(self):
        instances = np.array([[0, 0], [1, 0], [0, 0], [1, 0]])
        ds = build_dataset(instances, [0, 1, 0, 1], range_size=2)
        cfg = ProtocolConfig(repetitions=2, fraction=1.0, normalize=False)
        report = run_protocol(ds, MethodId.ARI, cfg)
        assert FLAG_ZERO_VARIANCE in report.scores[1].flags
        assert report.scores[1].raw_mean == 0.0
        assert report.scores[1].zero_variance_count == 2

    def test_mixed_repetitions_average_only_ratio_kind(self):
        # Sample size 2 of this dataset sometimes sees one distinct value
        # (zero variance) and sometimes two; only ratio draws are averaged.
        ds = build_dataset([[0], [0], [1]], [0, 0, 1], range_size=2)
        cfg = ProtocolConfig(repetitions=20, absolute=2, seed=0, normalize=False)
        report = run_protocol(ds, MethodId.ARI, cfg)
        score = report.scores[0]
        assert score.ratio_count + score.zero_variance_count + score.redundant_count == 20
        assert 0 < score.ratio_count < 20
        assert score.raw_mean == pytest.approx(1.0)

    def test_all_flagged_raises_when_normalizing(self):
        instances = np.hstack([np.arange(4)[:, None] % 2, np.arange(4)[:, None] % 2])
        ds = build_dataset(instances, [0, 1, 0, 1], range_size=2)
        cfg = ProtocolConfig(repetitions=2, fraction=1.0)
        with pytest.raises(NoScorableFeatureError):
            run_protocol(ds, MethodId.ARI, cfg)
        report = run_protocol(
            ds, MethodId.ARI, ProtocolConfig(repetitions=2, fraction=1.0, normalize=False)
        )
        assert all(s.raw_mean == 2.0 for s in report.scores)

    def test_relief_negatives_clamped_in_normalization(self):
        ds = generate(SyntheticSpec(function="g2", dimension=6, range_size=2))
        cfg = ProtocolConfig(repetitions=3, fraction=0.5, seed=4)
        report = run_protocol(ds, MethodId.RELIEF, cfg)
        raw = report.raw_means()
        assert raw.min() < 0
        values = [s.normalized for s in report.scores]
        assert min(values) == 0.0
        assert sum(values) == pytest.approx(1.0, abs=1e-9)

    def test_absolute_sample_size_echoed(self):
        ds = generate(SyntheticSpec(function="g1", dimension=10, range_size=2))
        cfg = ProtocolConfig(repetitions=2, absolute=200, seed=3, normalize=False)
        report = run_protocol(ds, MethodId.ARI, cfg)
        assert report.sample_size == 200
        assert report.config == cfg


class TestDimensionalitySweep:
    def test_one_report_per_size_with_flags(self):
        template = SyntheticSpec(function="g1", dimension=15, range_size=3)
        cfg = ProtocolConfig(repetitions=3, seed=7, normalize=False)
        reports = dimensionality_sweep(template, [50, 400], cfg)
        assert [r.sample_size for r in reports] == [50, 400]
        assert reports[0].redundant_fraction >= 0.9
        assert reports[1].redundant_fraction >= 0.9

    def test_full_enumeration_has_no_sentinels(self):
        ds = generate(SyntheticSpec(function="g2", dimension=6, range_size=2))
        report = run_protocol(
            ds, MethodId.ARI, ProtocolConfig(repetitions=2, fraction=1.0, normalize=False)
        )
        assert all(len(s.flags) == 0 for s in report.scores)

    def test_sweep_deterministic(self):
        template = SyntheticSpec(function="g1", dimension=10, range_size=2)
        cfg = ProtocolConfig(repetitions=2, seed=5, normalize=False)
        a = dimensionality_sweep(template, [100, 200], cfg)
        b = dimensionality_sweep(template, [100, 200], cfg)
        assert a == b

    def test_sizes_must_be_nonempty(self):
        template = SyntheticSpec(function="g1", dimension=10, range_size=2)
        with pytest.raises(ValueError):
            dimensionality_sweep(template, [], ProtocolConfig())

    def test_config_echo_carries_size(self):
        template = SyntheticSpec(function="g1", dimension=10, range_size=2)
        cfg = ProtocolConfig(repetitions=2, seed=5, normalize=False)
        reports = dimensionality_sweep(template, [64], cfg)
        assert reports[0].config.absolute == 64
