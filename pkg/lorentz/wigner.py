"""
Wigner Rotations
Ω(Λ, p) = L(Λp)^{-1} Λ L(p) 의 SU(2) 표현

Usage:
    from lorentz.wigner import wigner_rotation, wigner_su2_batch

    w = wigner_rotation(boost_from_velocity([0, 0, 0.5]), FourVector.on_shell([np.sqrt(3), 0, 0]))
    print(w.axis, w.angle)

    # quadrature nodes
    su2 = wigner_su2_batch(boost, momenta)   # (k, 2, 2)
"""

import logging
from dataclasses import dataclass
from typing import Dict, Any

import numpy as np

from qmath.errors import NumericalDegeneracyError, ShapeError
from qmath.linalg import IDENTITY_2, PAULIS, unitarity_defect
from .group import (
    FourVector,
    LorentzElement,
    canonicalize_sign,
    standard_boost,
    standard_boost_inverse_sl2,
    require_massive,
)

logger = logging.getLogger(__name__)

UNITARITY_TOL = 1e-10
AXIS_EPS = 1e-12


def axis_angle_from_su2(u: np.ndarray):
    """
    U = exp(-i(θ/2) n·σ) 에서 (n, θ) 추출, θ ∈ [0, 2π)

    Falls back to axis ẑ when sin(θ/2) vanishes.
    """
    u = np.asarray(u, dtype=np.complex128)
    half_cos = float(np.clip(np.real(np.trace(u)) / 2.0, -1.0, 1.0))
    angle = 2.0 * np.arccos(half_cos)
    half_sin = np.sin(angle / 2.0)
    if half_sin < AXIS_EPS:
        return np.array([0.0, 0.0, 1.0]), 0.0
    axis = np.real(np.array([1j * np.trace(s @ u) for s in PAULIS])) / (2.0 * half_sin)
    axis /= np.linalg.norm(axis)
    return axis, float(angle % (2 * np.pi))


@dataclass(frozen=True, eq=False)
class WignerRotation:
    """Wigner 회전 (su2, 축, 각)"""
    su2: np.ndarray
    axis: np.ndarray
    angle: float

    @classmethod
    def from_su2(cls, u: np.ndarray) -> "WignerRotation":
        u = canonicalize_sign(u)
        axis, angle = axis_angle_from_su2(u)
        u = u.copy()
        u.setflags(write=False)
        axis.setflags(write=False)
        return cls(u, axis, angle)

    @property
    def so3(self) -> np.ndarray:
        """R_ij = ½ tr(σ_i U σ_j U^dag)"""
        u = self.su2
        return np.real(0.5 * np.einsum('iab,bc,jcd,da->ij', np.array(PAULIS), u, np.array(PAULIS), u.conj().T))

    def as_lorentz(self) -> LorentzElement:
        return LorentzElement.from_sl2(self.su2)

    def reconstruct(self) -> np.ndarray:
        """exp(-i(θ/2) n·σ)"""
        n_sigma = np.einsum('k,kab->ab', self.axis, np.array(PAULIS))
        return np.cos(self.angle / 2) * IDENTITY_2 - 1j * np.sin(self.angle / 2) * n_sigma

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axis": [float(c) for c in self.axis],
            "angle": float(self.angle),
            "su2": [[[float(z.real), float(z.imag)] for z in row] for row in self.su2],
        }


def wigner_rotation(lam: LorentzElement, p: FourVector) -> WignerRotation:
    """
    Wigner 회전 계산

    Args:
        lam: 로렌츠 변환
        p: 질량 1 on-shell 운동량

    Returns:
        WignerRotation

    Raises:
        ShellError: p가 질량껍질 밖
        NumericalDegeneracyError: 결과가 유니터리 허용오차를 벗어남
    """
    require_massive(p)
    lam_p = lam.apply(p)
    w = standard_boost_inverse_sl2(lam_p) @ lam.sl2 @ standard_boost(p).sl2
    defect = unitarity_defect(w)
    if defect > UNITARITY_TOL:
        raise NumericalDegeneracyError(
            f"Wigner rotation unitarity defect {defect:.3e} at |p| = {np.linalg.norm(p.spatial):.6g}"
        )
    logger.debug(f"wigner_rotation: p={p.as_array().tolist()}, defect={defect:.2e}")
    return WignerRotation.from_su2(w)


def _batched_boost_sl2(momenta: np.ndarray, energies: np.ndarray, sign: float) -> np.ndarray:
    paulis = np.array(PAULIS)
    big_p = energies[:, None, None] * IDENTITY_2 + sign * np.einsum('kj,jab->kab', momenta, paulis)
    return (big_p + IDENTITY_2) / np.sqrt(2.0 * energies + 2.0)[:, None, None]


def wigner_su2_batch(lam: LorentzElement, momenta: np.ndarray) -> np.ndarray:
    """
    여러 운동량에 대한 Wigner SU(2) 행렬 (벡터화)

    Args:
        lam: 로렌츠 변환
        momenta: (k, 3) 공간 운동량 (on-shell 에너지는 내부에서 계산)

    Returns:
        (k, 2, 2) complex128, sign not canonicalized
    """
    momenta = np.asarray(momenta, dtype=np.float64)
    if momenta.ndim != 2 or momenta.shape[1] != 3:
        raise ShapeError(f"momenta must have shape (k, 3), got {momenta.shape}")
    energies = np.sqrt(1.0 + np.einsum('kj,kj->k', momenta, momenta))
    four = np.column_stack([energies, momenta])
    moved = four @ lam.mat4.T
    forward = _batched_boost_sl2(momenta, energies, +1.0)
    back = _batched_boost_sl2(moved[:, 1:], moved[:, 0], -1.0)
    w = np.einsum('kab,bc,kcd->kad', back, lam.sl2, forward)

    gram = np.einsum('kba,kbc->kac', w.conj(), w)
    defect = float(np.max(np.abs(gram - IDENTITY_2)))
    if defect > UNITARITY_TOL:
        raise NumericalDegeneracyError(f"batched Wigner rotation unitarity defect {defect:.3e}")
    return w
