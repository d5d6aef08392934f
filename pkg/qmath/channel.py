"""
Quantum Channels
Kraus 형식 CPTP 맵과 Choi 검증

Usage:
    from qmath.channel import QuantumChannel, apply_channel, choi_check

    ch = QuantumChannel.from_kraus([K0, K1], weights=[0.9, 0.1])
    report = choi_check(ch)
    if report.accepted:
        out = apply_channel(ch, rho)
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Any, Optional, Sequence, List

import numpy as np

from .errors import ShapeError, ChannelIntegrityError, SizeError
from .linalg import MAX_DIM, operator_trace_distance, tensor_all
from .states import DensityMatrix

logger = logging.getLogger(__name__)

TP_TOL = 1e-10
CHOI_TOL = 1e-10


@dataclass(frozen=True)
class ChoiReport:
    """Choi / trace-preserving 진단 결과"""
    tp_defect: float
    min_choi_eig: float
    tp_tol: float = TP_TOL
    choi_tol: float = CHOI_TOL

    @property
    def accepted(self) -> bool:
        return self.tp_defect <= self.tp_tol and self.min_choi_eig >= -self.choi_tol

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tp_defect": self.tp_defect,
            "min_choi_eig": self.min_choi_eig,
            "accepted": self.accepted,
        }


@dataclass(frozen=True, eq=False)
class QuantumChannel:
    """
    Kraus 형식 양자 채널

    rho -> Σ_k w_k K_k rho K_k^dag. ``weights`` is None for a plain Kraus
    set (all weights 1) and a nonnegative vector for mixture channels.
    """
    dim_in: int
    dim_out: int
    kraus_ops: np.ndarray  # shape (k, dim_out, dim_in)
    weights: Optional[np.ndarray] = None
    label: str = "channel"

    def __post_init__(self):
        ops = np.array(self.kraus_ops, dtype=np.complex128)
        if ops.ndim == 2:
            ops = ops[None, :, :]
        if ops.ndim != 3 or ops.shape[1:] != (self.dim_out, self.dim_in):
            raise ShapeError(
                f"Kraus operators must have shape (k, {self.dim_out}, {self.dim_in}), got {ops.shape}"
            )
        ops.setflags(write=False)
        object.__setattr__(self, 'kraus_ops', ops)
        if self.weights is not None:
            w = np.array(self.weights, dtype=np.float64).reshape(-1)
            if w.shape[0] != ops.shape[0]:
                raise ShapeError(f"{w.shape[0]} weights for {ops.shape[0]} Kraus operators")
            if np.any(w < 0):
                raise ChannelIntegrityError("mixture weights must be nonnegative")
            w.setflags(write=False)
            object.__setattr__(self, 'weights', w)

    @classmethod
    def from_kraus(
        cls,
        kraus: Sequence[np.ndarray],
        weights: Optional[Sequence[float]] = None,
        label: str = "channel",
    ) -> "QuantumChannel":
        ops = np.array([np.asarray(k, dtype=np.complex128) for k in kraus])
        return cls(ops.shape[2], ops.shape[1], ops, weights, label)

    @classmethod
    def identity(cls, dim: int) -> "QuantumChannel":
        return cls(dim, dim, np.eye(dim, dtype=np.complex128)[None], label="identity")

    @classmethod
    def unitary(cls, u: np.ndarray, label: str = "unitary") -> "QuantumChannel":
        u = np.asarray(u, dtype=np.complex128)
        return cls(u.shape[1], u.shape[0], u[None], label=label)

    @property
    def n_kraus(self) -> int:
        return int(self.kraus_ops.shape[0])

    @property
    def effective_weights(self) -> np.ndarray:
        if self.weights is None:
            return np.ones(self.n_kraus)
        return self.weights

    @cached_property
    def choi_report(self) -> ChoiReport:
        return choi_check(self)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "dim_in": self.dim_in,
            "dim_out": self.dim_out,
            "n_kraus": self.n_kraus,
        }


def _tp_sum(ch: QuantumChannel) -> np.ndarray:
    """Σ w K^dag K"""
    ops = ch.kraus_ops
    return np.einsum('k,kai,kaj->ij', ch.effective_weights, ops.conj(), ops)


def choi_matrix(ch: QuantumChannel) -> np.ndarray:
    """
    정규화된 Choi 행렬 J = (1/d_in) Σ_ij |i><j| ⊗ E(|i><j|)

    Trace one for trace-preserving channels.
    """
    ops = ch.kraus_ops
    j = np.einsum('k,kai,kbj->iajb', ch.effective_weights, ops, ops.conj())
    size = ch.dim_in * ch.dim_out
    return j.reshape(size, size) / ch.dim_in


def choi_check(ch: QuantumChannel) -> ChoiReport:
    """
    CPTP 진단

    Returns:
        ChoiReport(tp_defect = ||Σ K^dag K - I||_2, min_choi_eig)
    """
    tp = _tp_sum(ch)
    tp_defect = float(np.linalg.norm(tp - np.eye(ch.dim_in), 2))
    choi = choi_matrix(ch)
    min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (choi + choi.conj().T))))
    report = ChoiReport(tp_defect=tp_defect, min_choi_eig=min_eig)
    logger.debug(f"choi_check[{ch.label}]: tp_defect={tp_defect:.3e}, min_eig={min_eig:.3e}")
    return report


def choi_distance(a: QuantumChannel, b: QuantumChannel) -> float:
    """두 채널의 정규화 Choi 행렬 간 대각합 거리"""
    if (a.dim_in, a.dim_out) != (b.dim_in, b.dim_out):
        raise ShapeError("channels act on different spaces")
    return operator_trace_distance(choi_matrix(a), choi_matrix(b))


def apply_channel(ch: QuantumChannel, rho: DensityMatrix) -> DensityMatrix:
    """
    채널 적용 Σ w K rho K^dag

    Raises:
        ShapeError: 입력 차원 불일치
        ChannelIntegrityError: trace-preserving 허용오차 초과
    """
    if rho.dim != ch.dim_in:
        raise ShapeError(f"channel expects dim {ch.dim_in}, got {rho.dim}")
    report = ch.choi_report
    if report.tp_defect > report.tp_tol:
        raise ChannelIntegrityError(
            f"channel '{ch.label}' is not trace preserving (defect {report.tp_defect:.3e})"
        )
    ops = ch.kraus_ops
    out = np.einsum('k,kab,bc,kdc->ad', ch.effective_weights, ops, rho.matrix, ops.conj())
    return DensityMatrix.from_matrix(out)


def apply_to_qubit(ch: QuantumChannel, rho: DensityMatrix, qubit: int) -> DensityMatrix:
    """
    단일 큐비트 채널을 n 큐비트 상태의 한 큐비트에 적용

    Qubit 0 is the most significant bit of the computational index.
    """
    if (ch.dim_in, ch.dim_out) != (2, 2):
        raise ShapeError(f"expected a single-qubit channel, got {ch.dim_in}->{ch.dim_out}")
    n = rho.n_qubits
    if not 0 <= qubit < n:
        raise ShapeError(f"qubit {qubit} out of range for {n} qubits")
    report = ch.choi_report
    if report.tp_defect > report.tp_tol:
        raise ChannelIntegrityError(
            f"channel '{ch.label}' is not trace preserving (defect {report.tp_defect:.3e})"
        )
    left, right = 2 ** qubit, 2 ** (n - qubit - 1)
    t = rho.matrix.reshape(left, 2, right, left, 2, right)
    ops = ch.kraus_ops
    out = np.einsum('k,kab,lbrmcs,kdc->larmds', ch.effective_weights, ops, t, ops.conj())
    return DensityMatrix.from_matrix(out.reshape(rho.dim, rho.dim))


def mixture(channels: Sequence[QuantumChannel], probs: Sequence[float], label: str = "mixture") -> QuantumChannel:
    """
    채널 혼합 Σ_i p_i E_i

    Kraus sets are concatenated and weights multiplied through.
    """
    if len(channels) != len(probs) or not channels:
        raise ShapeError("need one probability per channel")
    dims = {(c.dim_in, c.dim_out) for c in channels}
    if len(dims) != 1:
        raise ShapeError(f"channels act on different spaces: {sorted(dims)}")
    ops: List[np.ndarray] = []
    weights: List[np.ndarray] = []
    for ch, p in zip(channels, probs):
        ops.append(ch.kraus_ops)
        weights.append(float(p) * ch.effective_weights)
    d_in, d_out = dims.pop()
    return QuantumChannel(d_in, d_out, np.concatenate(ops), np.concatenate(weights), label)


def compress_kraus(ch: QuantumChannel, cutoff: float = 1e-14) -> QuantumChannel:
    """
    Choi 고유분해로 최소 Kraus 집합 생성 (최대 d_in * d_out 개)

    Eigenvalues below ``cutoff`` are dropped.
    """
    choi = ch.dim_in * choi_matrix(ch)
    w, v = np.linalg.eigh(0.5 * (choi + choi.conj().T))
    keep = w > cutoff
    ops = [
        np.sqrt(lam) * vec.reshape(ch.dim_in, ch.dim_out).T
        for lam, vec in zip(w[keep], v[:, keep].T)
    ]
    if not ops:
        raise ChannelIntegrityError(f"channel '{ch.label}' has a vanishing Choi matrix")
    return QuantumChannel(ch.dim_in, ch.dim_out, np.array(ops), label=ch.label)


def tensor_power_channel(ch: QuantumChannel, n: int, max_dim: int = MAX_DIM) -> QuantumChannel:
    """
    E^{⊗n}: 각 입자에 독립적으로 작용하는 곱 채널

    Kraus count grows as k^n.
    """
    if n < 1:
        raise ShapeError(f"tensor power needs n >= 1, got {n}")
    if ch.dim_in ** n > max_dim or ch.dim_out ** n > max_dim:
        raise SizeError(f"{n}-fold product channel exceeds dimension cap {max_dim}")
    k = ch.n_kraus
    ops = []
    weights = []
    for index in np.ndindex(*([k] * n)):
        ops.append(tensor_all([ch.kraus_ops[i] for i in index], max_dim=max_dim))
        weights.append(float(np.prod([ch.effective_weights[i] for i in index])))
    return QuantumChannel(
        ch.dim_in ** n, ch.dim_out ** n, np.array(ops), np.array(weights), f"{ch.label}^{n}"
    )
