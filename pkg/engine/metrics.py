"""
Channel Metrics Calculator
채널 출력 품질 지표 계산 모듈

Metrics:
    - Fidelity to input: <ψ|E(ρ)|ψ> 또는 Uhlmann 충실도
    - Trace distance: ½||E(ρ) - ρ||₁
    - Choi defects: TP 결함, Choi 최소 고유값
    - Halving ratio: Δ 반감 시 불일치 감소율
"""

from typing import Dict, Any, Optional, Sequence
from dataclasses import dataclass

import numpy as np
import pandas as pd

from qmath.channel import QuantumChannel, apply_channel
from qmath.linalg import fidelity, trace_distance
from qmath.states import DensityMatrix


@dataclass
class ChannelMetrics:
    """채널 지표 데이터 클래스"""
    fidelity_to_input: float
    trace_distance: float
    tp_defect: float
    min_choi_eig: float
    n_kraus: int

    def to_dict(self) -> Dict[str, Any]:
        """딕셔너리로 변환"""
        return {
            'fidelity_to_input': self.fidelity_to_input,
            'trace_distance': self.trace_distance,
            'tp_defect': self.tp_defect,
            'min_choi_eig': self.min_choi_eig,
            'n_kraus': self.n_kraus,
        }

    def summary(self) -> str:
        """결과 요약 문자열"""
        lines = [
            "=" * 60,
            "CHANNEL METRICS",
            "=" * 60,
            f"{'Fidelity to input:':<25} {self.fidelity_to_input:>14.12f}",
            f"{'Trace distance:':<25} {self.trace_distance:>14.6e}",
            "-" * 60,
            f"{'TP defect:':<25} {self.tp_defect:>14.3e}",
            f"{'Min Choi eigenvalue:':<25} {self.min_choi_eig:>14.3e}",
            f"{'# Kraus:':<25} {self.n_kraus:>14d}",
            "=" * 60,
        ]
        return "\n".join(lines)


def calculate_fidelity_to_input(rho_in: DensityMatrix, rho_out: DensityMatrix) -> float:
    """
    입력 대비 충실도

    Pure inputs use <ψ|ρ_out|ψ> directly; mixed inputs fall back to the
    Uhlmann fidelity.
    """
    if abs(rho_in.purity() - 1.0) < 1e-12:
        w, v = np.linalg.eigh(rho_in.matrix)
        psi = v[:, int(np.argmax(w))]
        return float(np.real(np.vdot(psi, rho_out.matrix @ psi)))
    return fidelity(rho_in, rho_out)


def calculate_metrics(channel: QuantumChannel, rho_in: DensityMatrix) -> ChannelMetrics:
    """
    채널과 입력 상태에서 모든 지표 계산

    Args:
        channel: 평가할 채널
        rho_in: 입력 상태

    Returns:
        ChannelMetrics 객체
    """
    rho_out = apply_channel(channel, rho_in)
    report = channel.choi_report
    return ChannelMetrics(
        fidelity_to_input=calculate_fidelity_to_input(rho_in, rho_out),
        trace_distance=trace_distance(rho_in, rho_out),
        tp_defect=report.tp_defect,
        min_choi_eig=report.min_choi_eig,
        n_kraus=channel.n_kraus,
    )


def calculate_halving_ratios(values: Sequence[float]) -> pd.Series:
    """
    연속 행 사이의 감소율 values[i-1] / values[i]

    The first entry is NaN. A zero denominator gives inf.
    """
    series = pd.Series(np.asarray(values, dtype=np.float64))
    with np.errstate(divide='ignore', invalid='ignore'):
        return series.shift(1) / series


def is_monotone_decreasing(values: Sequence[float], strict: bool = True) -> bool:
    """단조 감소 여부"""
    diffs = np.diff(np.asarray(values, dtype=np.float64))
    return bool(np.all(diffs < 0) if strict else np.all(diffs <= 0))


def smallest_ratio(ratios: pd.Series) -> Optional[float]:
    """NaN 을 제외한 최소 감소율"""
    valid = ratios.dropna()
    if valid.empty:
        return None
    return float(valid.min())
