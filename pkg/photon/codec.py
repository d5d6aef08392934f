"""
Two-Photon Helicity Code
두 광자 헬리시티 불변 코드와 집단 위상 용량

Logical |0⟩, |1⟩ map to (|+-⟩ ± |-+⟩)/√2 at a common momentum. A Lorentz
transformation multiplies |σ1 σ2⟩ by e^{iω(σ1+σ2)}, so both code states
carry total helicity zero and are left exactly unchanged.

Usage:
    from photon.codec import photon_codec_encode, photon_codec_decode, apply_lorentz_photon

    state = photon_codec_encode(logical, FourVector.massless([0, 0, 1]))
    moved = apply_lorentz_photon(boost_from_velocity([0.3, 0, 0.2]), state)
    recovered = photon_codec_decode(moved)
    dephasing_logical_count(4)   # 2
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb, log2
from typing import Dict, Any, Sequence, Union

import numpy as np

from qmath.errors import DomainError, OutOfCodeError, ShapeError, StateValidationError
from qmath.states import PureState
from lorentz.group import FourVector, LorentzElement
from .little_group import little_group_phase, require_massless

logger = logging.getLogger(__name__)

AMPLITUDE_NORM_TOL = 1e-12
OUT_OF_CODE_TOL = 1e-12

HELICITIES = (1, -1)
# total helicity of ++, +-, -+, --
PAIR_HELICITY = np.array([2, 0, 0, -2])


def _checked_amplitudes(amps: Sequence[complex], size: int) -> np.ndarray:
    arr = np.array(amps, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != size:
        raise ShapeError(f"expected {size} helicity amplitudes, got {arr.shape[0]}")
    norm_sq = float(np.real(np.vdot(arr, arr)))
    if abs(norm_sq - 1.0) > AMPLITUDE_NORM_TOL:
        raise StateValidationError(f"helicity amplitudes not normalized (|a|^2 = {norm_sq:.15g})")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PhotonMode:
    """단일 광자 (운동량, (a+, a-))"""
    momentum: FourVector
    amplitudes: np.ndarray

    def __post_init__(self):
        require_massless(self.momentum)
        object.__setattr__(self, 'amplitudes', _checked_amplitudes(self.amplitudes, 2))

    @classmethod
    def helicity(cls, momentum: FourVector, sigma: int) -> "PhotonMode":
        """헬리시티 고유상태 |p, σ⟩"""
        if sigma not in HELICITIES:
            raise DomainError(f"helicity must be +1 or -1, got {sigma}")
        return cls(momentum, [1.0, 0.0] if sigma == 1 else [0.0, 1.0])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "momentum": self.momentum.to_dict(),
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }


@dataclass(frozen=True, eq=False)
class TwoPhotonState:
    """
    공통 운동량의 두 광자 상태

    Amplitudes are ordered ++, +-, -+, -- with the first photon as the
    major index.
    """
    momentum: FourVector
    amplitudes: np.ndarray

    def __post_init__(self):
        require_massless(self.momentum)
        object.__setattr__(self, 'amplitudes', _checked_amplitudes(self.amplitudes, 4))

    @classmethod
    def product(cls, first: PhotonMode, second: PhotonMode) -> "TwoPhotonState":
        if not np.allclose(first.momentum.as_array(), second.momentum.as_array(), atol=1e-12):
            raise DomainError("two-photon code states share a common momentum")
        return cls(first.momentum, np.kron(first.amplitudes, second.amplitudes))

    def helicity_zero_weight(self) -> float:
        """{+-, -+} 위의 가중치"""
        return float(np.sum(np.abs(self.amplitudes[PAIR_HELICITY == 0]) ** 2))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "momentum": self.momentum.to_dict(),
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }


PhotonState = Union[PhotonMode, TwoPhotonState]


def apply_lorentz_photon(lam: LorentzElement, state: PhotonState) -> PhotonState:
    """
    U(Λ)|p, σ⟩ = e^{iσω(Λ,p)} |Λp, σ⟩

    Null rotations act trivially on physical states and are not applied.
    """
    omega = little_group_phase(lam, state.momentum).omega
    moved = lam.apply(state.momentum)
    if isinstance(state, PhotonMode):
        phases = np.exp(1j * omega * np.array(HELICITIES))
        return PhotonMode(moved, state.amplitudes * phases)
    if isinstance(state, TwoPhotonState):
        phases = np.exp(1j * omega * PAIR_HELICITY)
        return TwoPhotonState(moved, state.amplitudes * phases)
    raise ShapeError(f"unsupported photon state type {type(state).__name__}")


# ============================================================
# Code
# ============================================================

def photon_codec_encode(logical: PureState, p: FourVector) -> TwoPhotonState:
    """
    논리 큐비트 -> 두 광자 상태

    |0⟩ -> (|+-⟩ + |-+⟩)/√2, |1⟩ -> (|+-⟩ - |-+⟩)/√2
    """
    if logical.dim != 2:
        raise ShapeError(f"photon code carries one logical qubit, got dim {logical.dim}")
    a0, a1 = logical.amplitudes
    root = np.sqrt(0.5)
    return TwoPhotonState(p, [0.0, root * (a0 + a1), root * (a0 - a1), 0.0])


def photon_codec_decode(state: TwoPhotonState) -> PureState:
    """
    두 광자 상태 -> 논리 큐비트

    Raises:
        OutOfCodeError: ++ 또는 -- 성분이 존재
    """
    leak = 1.0 - state.helicity_zero_weight()
    if leak > OUT_OF_CODE_TOL:
        raise OutOfCodeError(f"state has weight {leak:.3e} outside the helicity-zero sector")
    c_pm, c_mp = state.amplitudes[1], state.amplitudes[2]
    root = np.sqrt(0.5)
    return PureState.from_vector([root * (c_pm + c_mp), root * (c_pm - c_mp)], normalize=True)


# ============================================================
# Collective dephasing capacity
# ============================================================

def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise DomainError(f"photon count must be even and >= 2, got {n}")


def dephasing_logical_count(n: int) -> int:
    """floor(log2 C(n, n/2)): 총 헬리시티 0 섹터의 논리 큐비트 수"""
    _require_even(n)
    return comb(n, n // 2).bit_length() - 1


def dephasing_capacity_bits(n: int) -> float:
    """log2 C(n, n/2) (내림 없음)"""
    _require_even(n)
    return log2(comb(n, n // 2))


def balanced_sector_dimension(n: int) -> int:
    """헬리시티 문자열 전수 열거로 센 총 헬리시티 0 섹터 차원"""
    return sum(1 for word in product(HELICITIES, repeat=n) if sum(word) == 0)
