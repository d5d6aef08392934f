"""
Lattice State
간격 a 로 배치된 N 입자 격자 상태

Usage:
    from wavepacket.lattice import make_lattice

    lattice = make_lattice(4, 2 * a_min, packet, spin_state)
    print(lattice.max_overlap)
"""

import logging
from dataclasses import dataclass
from typing import Dict, Any, Tuple

import numpy as np

from qmath.errors import DomainError, IndistinguishabilityError, ShapeError
from qmath.states import PureState
from .packet import GaussianPacket, DISTINGUISHABILITY_THRESHOLD, overlap, separation_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LatticeState:
    """
    1차원 격자 상태

    Particle k sits at z = k * spacing. ``pair_overlaps[d-1]`` is
    |⟨Ψ|Ψ_{d·a}⟩| for particles d sites apart.
    """
    n: int
    spacing: float
    packet: GaussianPacket
    spin_state: PureState
    pair_overlaps: Tuple[float, ...]
    threshold: float = DISTINGUISHABILITY_THRESHOLD

    @property
    def positions(self) -> np.ndarray:
        return self.spacing * np.arange(self.n)

    @property
    def max_overlap(self) -> float:
        return max(self.pair_overlaps) if self.pair_overlaps else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "spacing": self.spacing,
            "packet": self.packet.to_dict(),
            "pair_overlaps": list(self.pair_overlaps),
            "max_overlap": self.max_overlap,
            "threshold": self.threshold,
        }


def make_lattice(
    n: int,
    spacing: float,
    packet: GaussianPacket,
    spin: PureState,
    threshold: float = DISTINGUISHABILITY_THRESHOLD,
) -> LatticeState:
    """
    격자 상태 생성 (구별가능성 검증 포함)

    Raises:
        ShapeError: spin 상태가 n 큐비트가 아님
        IndistinguishabilityError: spacing < 최소 구별 거리
    """
    if n < 1:
        raise DomainError(f"lattice needs at least one particle, got {n}")
    if spacing <= 0:
        raise DomainError(f"spacing must be positive, got {spacing}")
    if spin.n_qubits != n:
        raise ShapeError(f"spin state has {spin.n_qubits} qubits for a lattice of {n}")

    if n == 1:
        return LatticeState(n, float(spacing), packet, spin, (), threshold)

    a_min = separation_for(packet, threshold)
    if spacing < a_min:
        raise IndistinguishabilityError(
            f"spacing {spacing:.6g} is below the distinguishability bound {a_min:.6g}"
        )
    pair = tuple(abs(overlap(packet, d * spacing)) for d in range(1, n))
    logger.info(f"make_lattice: n={n}, spacing={spacing:.6g}, a_min={a_min:.6g}, max overlap={max(pair):.3e}")
    return LatticeState(n, float(spacing), packet, spin, pair, threshold)
