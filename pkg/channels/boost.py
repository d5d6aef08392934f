"""
Boost Decoherence Channels
부스트에 의한 스핀 결어긋남 채널

Three pieces:
    - wigner_rotation_channel: sharp momentum, a unitary spin rotation
    - boost_channel_exact / lorentz_channel_exact: a packet's momentum spread
      traced out by quadrature over Wigner rotations
    - boost_channel_approx / boost_mixture: the leading-order closed form in
      Γ and its average over a discrete velocity prior

Usage:
    from channels.boost import gamma, boost_channel_approx, boost_channel_exact, BoostPrior

    g = gamma(0.5, 0.05)
    approx = boost_channel_approx(g)
    exact = boost_channel_exact(0.5, make_packet(0.05))
    mix = boost_mixture(BoostPrior.uniform([0.1, 0.5, 0.9]), delta=0.01)
"""

import logging
from dataclasses import dataclass
from typing import Dict, Any, Optional, Sequence, Tuple

import numpy as np

from qmath.channel import QuantumChannel, apply_to_qubit, choi_distance, mixture
from qmath.errors import AccuracyError, DomainError, RegimeError, SuperluminalError
from qmath.linalg import IDENTITY_2, PAULI_X, PAULI_Y
from qmath.states import DensityMatrix, PureState
from lorentz.group import FourVector, LorentzElement, boost_from_velocity
from lorentz.wigner import wigner_rotation, wigner_su2_batch
from schur.codec import NoiselessCodec, encode
from wavepacket.packet import GaussianPacket

logger = logging.getLogger(__name__)

GAMMA_REGIME_LIMIT = 0.5
CHANNEL_TOL = 1e-6
PRIOR_SUM_TOL = 1e-12


# ============================================================
# Γ parameter
# ============================================================

@dataclass(frozen=True)
class GammaParam:
    """Γ = (1 - sqrt(1 - v²)) Δ / v"""
    v: float
    delta: float
    gamma: float

    def to_dict(self) -> Dict[str, Any]:
        return {"v": self.v, "delta": self.delta, "gamma": self.gamma}


def gamma(v: float, delta: float) -> GammaParam:
    """
    결어긋남 파라미터 Γ

    Evaluated as vΔ / (1 + sqrt(1 - v²)), algebraically equal to the
    closed form and free of cancellation as v -> 0 (Γ -> vΔ/2).

    Raises:
        SuperluminalError: v >= 1
        DomainError: v <= 0 or delta <= 0
    """
    if v >= 1.0:
        raise SuperluminalError(f"v = {v} is not below the speed of light")
    if v <= 0.0:
        raise DomainError(f"v must lie in (0, 1), got {v}")
    if delta <= 0.0:
        raise DomainError(f"delta must be positive, got {delta}")
    value = v * delta / (1.0 + np.sqrt(1.0 - v * v))
    return GammaParam(float(v), float(delta), float(value))


# ============================================================
# Channels
# ============================================================

def boost_channel_approx(g: GammaParam, regime_limit: float = GAMMA_REGIME_LIMIT) -> QuantumChannel:
    """
    근사 부스트 채널

    ρ -> (1 - Γ²/4) ρ + (Γ²/8)(σx ρ σx + σy ρ σy)

    Raises:
        RegimeError: Γ >= regime_limit
    """
    if g.gamma >= regime_limit:
        raise RegimeError(f"gamma = {g.gamma:.6g} outside the leading-order regime (< {regime_limit})")
    g2 = g.gamma ** 2
    return QuantumChannel.from_kraus(
        [IDENTITY_2, PAULI_X, PAULI_Y],
        weights=[1.0 - g2 / 4.0, g2 / 8.0, g2 / 8.0],
        label="boost-approx",
    )


def wigner_rotation_channel(lam: LorentzElement, p: FourVector) -> QuantumChannel:
    """운동량 고유상태의 스핀 회전 (유니터리 채널)"""
    w = wigner_rotation(lam, p)
    return QuantumChannel.unitary(w.su2, label="wigner-rotation")


def _quadrature_channel(lam: LorentzElement, packet: GaussianPacket, nodes: int) -> QuantumChannel:
    grid = packet.grid(nodes)
    kraus = wigner_su2_batch(lam, grid.momenta)
    weights = grid.probs / np.sum(grid.probs)
    return QuantumChannel(2, 2, kraus, weights, label="boost-exact")


def lorentz_channel_exact(
    lam: LorentzElement,
    packet: GaussianPacket,
    tol: float = CHANNEL_TOL,
) -> Tuple[QuantumChannel, float]:
    """
    파속 운동량을 대각합한 스핀 채널

    ρ -> ∫dμ |ψ(p)|² W(Λ,p) ρ W(Λ,p)^dag as a weighted Kraus mixture over
    the packet's quadrature nodes.

    Returns:
        (channel, node-doubling Choi distance)

    Raises:
        AccuracyError: node-doubling estimate > tol
    """
    coarse = _quadrature_channel(lam, packet, packet.nodes)
    fine = _quadrature_channel(lam, packet, 2 * packet.nodes)
    error = choi_distance(coarse, fine)
    if error > tol:
        raise AccuracyError(f"boost channel quadrature not converged: estimate {error:.3e}")
    logger.debug(f"lorentz_channel_exact: nodes={packet.nodes}, kraus={coarse.n_kraus}, error={error:.2e}")
    return coarse, error


def boost_channel_exact(
    v: float,
    packet: GaussianPacket,
    tol: float = CHANNEL_TOL,
) -> QuantumChannel:
    """
    z축 속도 v 부스트의 정확한 구적 채널

    Raises:
        SuperluminalError / DomainError: v 범위 밖
        AccuracyError: 구적 수렴 실패
    """
    if v >= 1.0:
        raise SuperluminalError(f"v = {v} is not below the speed of light")
    if v <= 0.0:
        raise DomainError(f"v must lie in (0, 1), got {v}")
    channel, _ = lorentz_channel_exact(boost_from_velocity([0.0, 0.0, v]), packet, tol)
    return channel


# ============================================================
# Boost prior
# ============================================================

@dataclass(frozen=True)
class BoostPrior:
    """이산 속도 사전분포 ((v, weight), ...)"""
    grid: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        if not self.grid:
            raise DomainError("boost prior needs at least one point")
        weights = np.array([w for _, w in self.grid], dtype=np.float64)
        if np.any(weights < 0):
            raise DomainError("boost prior weights must be nonnegative")
        if abs(float(np.sum(weights)) - 1.0) > PRIOR_SUM_TOL:
            raise DomainError(f"boost prior weights sum to {np.sum(weights):.15g}, not 1")
        for v, _ in self.grid:
            if not 0.0 < v < 1.0:
                raise DomainError(f"prior velocity {v} outside (0, 1)")

    @classmethod
    def point_mass(cls, v: float) -> "BoostPrior":
        return cls(((float(v), 1.0),))

    @classmethod
    def from_weights(cls, velocities: Sequence[float], weights: Sequence[float]) -> "BoostPrior":
        """가중치를 정규화하여 생성"""
        if len(velocities) != len(weights):
            raise DomainError("need one weight per velocity")
        w = np.asarray(weights, dtype=np.float64)
        total = float(np.sum(w))
        if total <= 0:
            raise DomainError("boost prior weights must have a positive sum")
        return cls(tuple((float(v), float(x / total)) for v, x in zip(velocities, w)))

    @classmethod
    def uniform(cls, velocities: Sequence[float]) -> "BoostPrior":
        return cls.from_weights(velocities, [1.0] * len(velocities))

    @property
    def velocities(self) -> np.ndarray:
        return np.array([v for v, _ in self.grid])

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.grid])

    def to_dict(self) -> Dict[str, Any]:
        return {"grid": [[v, w] for v, w in self.grid]}


def boost_mixture(prior: BoostPrior, delta: float) -> QuantumChannel:
    """사전분포로 평균한 근사 부스트 채널"""
    channels = [boost_channel_approx(gamma(v, delta)) for v, _ in prior.grid]
    return mixture(channels, prior.weights, label="mixture")


# ============================================================
# Residual leakage on encoded states
# ============================================================

def residual_code_fidelity(
    codec: NoiselessCodec,
    g: GammaParam,
    logical: Optional[PureState] = None,
) -> float:
    """
    입자별 근사 부스트 채널 후 인코딩 상태의 충실도 <ψ|ρ'|ψ>

    Each qubit carries its own momentum spread, so the channel acts as
    boost_channel_approx(g) on every qubit in turn. The logical state
    defaults to the first logical basis vector.
    """
    if logical is None:
        logical = PureState.basis(0, codec.logical_dim)
    physical = encode(codec, logical)
    channel = boost_channel_approx(g)
    rho = DensityMatrix.from_pure(physical)
    for qubit in range(codec.n):
        rho = apply_to_qubit(channel, rho, qubit)
    amps = physical.amplitudes
    value = float(np.real(np.vdot(amps, rho.matrix @ amps)))
    logger.debug(f"residual_code_fidelity: n={codec.n}, j={codec.j}, gamma={g.gamma:.6g}, F={value:.12f}")
    return value
