"""
Tests for the sweep engine and channel metrics
"""

import numpy as np
import pandas as pd
import pytest

from qmath import DensityMatrix, PureState, SizeError, UsageError
from channels import boost_channel_approx, gamma
from engine import SWEEP_COLUMNS, RangeSpec, SweepEngine, calculate_halving_ratios, calculate_metrics
from engine.metrics import calculate_fidelity_to_input, is_monotone_decreasing, smallest_ratio


# ============================================================
# Fixtures
# ============================================================

@pytest.fixture
def engine():
    return SweepEngine(nodes=32)


@pytest.fixture
def plus():
    return DensityMatrix.from_pure(PureState.from_vector([1, 1], normalize=True))


# ============================================================
# RangeSpec
# ============================================================

class TestRangeSpec:
    """'start:stop:count' 격자"""

    def test_parse_range(self):
        spec = RangeSpec.parse("0.1:0.9:9")
        np.testing.assert_allclose(spec.values(), np.linspace(0.1, 0.9, 9))

    def test_parse_single_value(self):
        assert RangeSpec.parse("0.5").values().tolist() == [0.5]

    @pytest.mark.parametrize("text", ["0.1:0.9", "a:b:c", "0.1:0.9:x", ""])
    def test_bad_text(self, text):
        with pytest.raises(UsageError):
            RangeSpec.parse(text)

    def test_empty_range(self):
        with pytest.raises(UsageError):
            RangeSpec(0.1, 0.9, 0).values()

    def test_cap(self):
        with pytest.raises(SizeError):
            RangeSpec(0.1, 0.9, 101).values(max_points=100)


# ============================================================
# Metrics
# ============================================================

class TestMetrics:
    """채널 지표"""

    def test_metrics_for_approx_channel(self, plus):
        g = gamma(0.6, 0.1)
        metrics = calculate_metrics(boost_channel_approx(g), plus)
        assert metrics.fidelity_to_input == pytest.approx(1.0 - g.gamma ** 2 / 8.0)
        assert metrics.trace_distance == pytest.approx(g.gamma ** 2 / 8.0)
        assert metrics.n_kraus == 3
        assert "CHANNEL METRICS" in metrics.summary()

    def test_mixed_input_uses_uhlmann(self):
        mixed = DensityMatrix.maximally_mixed(2)
        assert calculate_fidelity_to_input(mixed, mixed) == pytest.approx(1.0)

    def test_halving_ratios(self):
        ratios = calculate_halving_ratios([16.0, 1.0, 0.0625])
        assert np.isnan(ratios.iloc[0])
        assert ratios.iloc[1:].tolist() == [16.0, 16.0]
        assert smallest_ratio(ratios) == 16.0
        assert smallest_ratio(pd.Series([np.nan])) is None

    def test_monotone(self):
        assert is_monotone_decreasing([3, 2, 1])
        assert not is_monotone_decreasing([3, 3, 1])
        assert is_monotone_decreasing([3, 3, 1], strict=False)


# ============================================================
# Sweeps
# ============================================================

class TestVelocitySweep:

    def test_columns_and_monotone_fidelity(self, engine):
        result = engine.run_velocity(RangeSpec(0.1, 0.9, 9), 0.01)
        assert list(result.frame.columns) == SWEEP_COLUMNS["velocity"]
        assert result.num_points == 9
        assert is_monotone_decreasing(result.frame["fidelity_to_input"])

    def test_csv_metadata_header(self, engine, tmp_path):
        result = engine.run_velocity(RangeSpec(0.2, 0.4, 3), 0.01)
        path = tmp_path / "velocity.csv"
        text = result.to_csv(str(path), metadata={"seed": 7, "command": "sweep velocity"})
        lines = text.splitlines()
        assert lines[0] == "# seed=7"
        assert lines[1] == "# command=sweep velocity"
        assert lines[2] == ",".join(SWEEP_COLUMNS["velocity"])
        assert path.read_text(encoding="utf-8") == text

    def test_superluminal_point_fails(self, engine):
        from qmath import SuperluminalError
        with pytest.raises(SuperluminalError):
            engine.run_velocity(RangeSpec(0.5, 1.0, 2), 0.01)

    def test_cap(self):
        with pytest.raises(SizeError):
            SweepEngine(max_points=5).run_velocity(RangeSpec(0.1, 0.9, 6), 0.01)


class TestDeltaSweep:
    """정확-근사 불일치 vs Δ"""

    def test_halving_ratio_at_least_eight(self, engine):
        result = engine.run_delta(0.5, 0.05, 3)
        frame = result.frame
        assert list(frame.columns) == SWEEP_COLUMNS["delta"]
        np.testing.assert_allclose(frame["delta"], [0.05, 0.025, 0.0125])
        assert np.isnan(frame["halving_ratio"].iloc[0])
        assert smallest_ratio(frame["halving_ratio"]) >= 8.0
        assert "Min halving ratio" in result.summary()


class TestCodeResidualSweep:

    def test_infidelity_grows_with_v(self, engine):
        result = engine.run_code_residual(RangeSpec(0.2, 0.8, 4), 0.05, n=4, j=0)
        frame = result.frame
        assert list(frame.columns) == SWEEP_COLUMNS["code-residual"]
        assert (frame["j"] == "0").all()
        assert frame["infidelity"].is_monotonic_increasing
        np.testing.assert_allclose(frame["fidelity"] + frame["infidelity"], 1.0)
