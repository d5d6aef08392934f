"""
Sweep Engine
파라미터 격자 위에서 결어긋남 지표를 계산하는 스윕 엔진

Sweep types:
    - velocity: 근사 부스트 채널의 충실도/대각합 거리 vs v
    - delta: 정확-근사 채널 Choi 불일치 vs Δ (Δ 를 매 행 반감)
    - code-residual: 입자별 부스트 채널 후 인코딩 상태 충실도 vs v

Usage:
    from engine import SweepEngine, RangeSpec

    engine = SweepEngine(nodes=32)
    result = engine.run_velocity(RangeSpec(0.1, 0.9, 9), delta=0.01)
    print(result.summary())
    result.to_csv("velocity.csv", metadata={"seed": 7})
"""

import io
import logging
from dataclasses import dataclass, field
from typing import Dict, Any, List, Optional

import numpy as np
import pandas as pd

from qmath.errors import SizeError, UsageError
from qmath.states import DensityMatrix, PureState
from channels.boost import (
    CHANNEL_TOL,
    boost_channel_approx,
    boost_channel_exact,
    gamma,
    residual_code_fidelity,
)
from qmath.channel import choi_distance
from schur.codec import make_codec
from wavepacket.packet import DEFAULT_NODES, make_packet
from .metrics import calculate_halving_ratios, calculate_metrics, is_monotone_decreasing, smallest_ratio

logger = logging.getLogger(__name__)

MAX_SWEEP_POINTS = 10000
CSV_FLOAT_FORMAT = "%.17g"

SWEEP_COLUMNS: Dict[str, List[str]] = {
    "velocity": ["v", "delta", "gamma", "fidelity_to_input", "trace_distance"],
    "delta": ["v", "delta", "gamma", "choi_discrepancy", "halving_ratio"],
    "code-residual": ["v", "delta", "gamma", "n", "j", "fidelity", "infidelity"],
}


@dataclass(frozen=True)
class RangeSpec:
    """등간격 격자 [start, stop] x count"""
    start: float
    stop: float
    count: int

    @classmethod
    def parse(cls, text: str) -> "RangeSpec":
        """'start:stop:count' 또는 단일 값"""
        parts = [p.strip() for p in str(text).split(':')]
        try:
            if len(parts) == 1:
                value = float(parts[0])
                return cls(value, value, 1)
            if len(parts) == 3:
                return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError:
            pass
        raise UsageError(f"range must be 'start:stop:count' or a number, got {text!r}")

    def values(self, max_points: int = MAX_SWEEP_POINTS) -> np.ndarray:
        """
        격자 값

        Raises:
            UsageError: count < 1 또는 유한하지 않은 끝점
            SizeError: count > max_points
        """
        if self.count < 1:
            raise UsageError(f"empty range ({self.count} points)")
        if not (np.isfinite(self.start) and np.isfinite(self.stop)):
            raise UsageError("range endpoints must be finite")
        if self.count > max_points:
            raise SizeError(f"sweep of {self.count} points exceeds cap {max_points}")
        return np.linspace(self.start, self.stop, self.count)

    def to_dict(self) -> Dict[str, Any]:
        return {"start": self.start, "stop": self.stop, "count": self.count}


@dataclass
class SweepResult:
    """스윕 결과"""
    sweep_type: str
    frame: pd.DataFrame
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def num_points(self) -> int:
        return int(len(self.frame))

    def to_csv(self, path: Optional[str] = None, metadata: Optional[Dict[str, Any]] = None) -> str:
        """
        '# key=value' 메타데이터 줄 + CSV 본문

        Returns the text; also writes it to ``path`` when given.
        """
        buffer = io.StringIO()
        for key, value in (metadata or {}).items():
            buffer.write(f"# {key}={value}\n")
        self.frame.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        text = buffer.getvalue()
        if path is not None:
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sweep": self.sweep_type,
            "params": self.params,
            "columns": list(self.frame.columns),
            "rows": self.frame.to_dict(orient="records"),
        }

    def summary(self) -> str:
        """결과 요약 문자열"""
        lines = [
            "=" * 60,
            f"SWEEP RESULTS ({self.sweep_type})",
            "=" * 60,
            f"{'# Points:':<25} {self.num_points:>10d}",
        ]
        if self.sweep_type == "velocity":
            fid = self.frame["fidelity_to_input"]
            lines += [
                f"{'Min fidelity:':<25} {fid.min():>10.6f}",
                f"{'Monotone in v:':<25} {str(is_monotone_decreasing(fid)):>10}",
            ]
        elif self.sweep_type == "delta":
            ratio = smallest_ratio(self.frame["halving_ratio"])
            lines.append(f"{'Max discrepancy:':<25} {self.frame['choi_discrepancy'].max():>10.3e}")
            if ratio is not None:
                lines.append(f"{'Min halving ratio:':<25} {ratio:>10.2f}")
        elif self.sweep_type == "code-residual":
            lines.append(f"{'Max infidelity:':<25} {self.frame['infidelity'].max():>10.3e}")
        lines.append("=" * 60)
        return "\n".join(lines)


class SweepEngine:
    """
    스윕 엔진

    각 격자점마다 채널을 만들고 지표를 계산하여 한 행으로 기록
    """

    def __init__(
        self,
        nodes: int = DEFAULT_NODES,
        channel_tol: float = CHANNEL_TOL,
        max_points: int = MAX_SWEEP_POINTS,
    ):
        """
        Args:
            nodes: 구적 노드 수 (delta 스윕)
            channel_tol: 정확 채널 수렴 허용오차
            max_points: 최대 격자점 수
        """
        self.nodes = nodes
        self.channel_tol = channel_tol
        self.max_points = max_points

    def run_velocity(
        self,
        velocities: RangeSpec,
        delta: float,
        input_state: Optional[DensityMatrix] = None,
    ) -> SweepResult:
        """
        근사 부스트 채널 스윕

        Args:
            velocities: v 격자
            delta: 운동량 폭 (mc 단위)
            input_state: 입력 상태 (기본 |+><+|)
        """
        grid = velocities.values(self.max_points)
        if input_state is None:
            input_state = DensityMatrix.from_pure(PureState.from_vector([1.0, 1.0], normalize=True))

        rows = []
        for v in grid:
            g = gamma(float(v), delta)
            metrics = calculate_metrics(boost_channel_approx(g), input_state)
            rows.append([g.v, g.delta, g.gamma, metrics.fidelity_to_input, metrics.trace_distance])
        logger.info(f"velocity sweep: {len(rows)} points, delta={delta}")
        frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS["velocity"])
        return SweepResult("velocity", frame, {"v": velocities.to_dict(), "delta": delta})

    def run_delta(self, v: float, delta_start: float, count: int) -> SweepResult:
        """
        Δ 반감 스윕: 정확 구적 채널과 근사 채널의 Choi 거리

        Row k uses delta_start / 2^k; halving_ratio is the previous row's
        discrepancy over this row's.
        """
        if count < 1:
            raise UsageError(f"empty range ({count} points)")
        if count > self.max_points:
            raise SizeError(f"sweep of {count} points exceeds cap {self.max_points}")

        deltas = delta_start / 2.0 ** np.arange(count)
        rows = []
        for delta in deltas:
            g = gamma(v, float(delta))
            packet = make_packet(float(delta), nodes=self.nodes)
            exact = boost_channel_exact(v, packet, self.channel_tol)
            discrepancy = choi_distance(exact, boost_channel_approx(g))
            logger.debug(f"delta={delta:.6g}: choi discrepancy {discrepancy:.3e}")
            rows.append([g.v, g.delta, g.gamma, discrepancy])
        frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS["delta"][:-1])
        frame["halving_ratio"] = calculate_halving_ratios(frame["choi_discrepancy"])
        logger.info(f"delta sweep: {count} halvings from {delta_start}, v={v}")
        return SweepResult("delta", frame, {"v": v, "delta_start": delta_start, "count": count,
                                            "nodes": self.nodes})

    def run_code_residual(
        self,
        velocities: RangeSpec,
        delta: float,
        n: int = 4,
        j: float = 0,
    ) -> SweepResult:
        """
        인코딩 상태의 잔여 결어긋남 스윕

        Each qubit passes through its own boost_channel_approx(Γ(v, Δ)).
        """
        grid = velocities.values(self.max_points)
        codec = make_codec(n, j)
        rows = []
        for v in grid:
            g = gamma(float(v), delta)
            value = residual_code_fidelity(codec, g)
            rows.append([g.v, g.delta, g.gamma, n, str(codec.j), value, 1.0 - value])
        logger.info(f"code-residual sweep: {len(rows)} points, n={n}, j={codec.j}")
        frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS["code-residual"])
        return SweepResult("code-residual", frame,
                           {"v": velocities.to_dict(), "delta": delta, "n": n, "j": str(codec.j)})
