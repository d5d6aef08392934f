"""
Massless Little Group
광자 운동량의 little group: 위상 회전 ω 와 null 회전 β

The fiducial null momentum is k = (1, 0, 0, 1). The standard boost takes k
to p by a z-boost of rapidity ln|p| followed by the rotation carrying ẑ to
p̂ about ẑ x p̂ (about x̂ by π when p̂ = -ẑ). In the double cover the little
group element is upper triangular; its lower-right entry is e^{iω/2}.

Usage:
    from photon.little_group import little_group_phase, massless_standard_boost

    p = FourVector.massless([0, 0, 1])
    w = little_group_phase(rotation([0, 0, 1], 0.3), p)
    print(w.omega)      # 0.3
"""

import logging
from dataclasses import dataclass
from typing import Dict, Any

import numpy as np

from qmath.errors import ConventionError, ShellError
from lorentz.group import (
    FourVector,
    LorentzElement,
    boost_from_rapidity,
    rotation,
    sl2_to_mat4,
)

logger = logging.getLogger(__name__)

FIDUCIAL_MOMENTUM = FourVector(1.0, 0.0, 0.0, 1.0)
TRIANGULARITY_TOL = 1e-9
AXIS_EPS = 1e-12


def require_massless(p: FourVector) -> None:
    if not p.is_forward_null():
        raise ShellError(
            f"momentum {p.as_array().tolist()} is not on the forward light cone "
            f"(t^2 - |p|^2 = {p.minkowski_norm_sq():.12g})"
        )


def massless_standard_boost(p: FourVector) -> LorentzElement:
    """
    표준 부스트 L(p): k = (1,0,0,1) -> p

    Raises:
        ShellError: p 가 전방 광원뿔 위에 있지 않음
    """
    require_massless(p)
    spatial = p.spatial
    size = float(np.linalg.norm(spatial))
    direction = spatial / size

    boost = boost_from_rapidity([0.0, 0.0, 1.0], float(np.log(size)))
    axis = np.cross([0.0, 0.0, 1.0], direction)
    if np.linalg.norm(axis) < AXIS_EPS:
        if direction[2] > 0:
            return boost
        return rotation([1.0, 0.0, 0.0], np.pi).compose(boost)
    angle = float(np.arccos(np.clip(direction[2], -1.0, 1.0)))
    return rotation(axis, angle).compose(boost)


@dataclass(frozen=True, eq=False)
class LittleGroupElement:
    """Little group 원소 W = S(β) R_z(ω)"""
    omega: float
    beta: complex
    sl2: np.ndarray

    def __post_init__(self):
        sl2 = np.array(self.sl2, dtype=np.complex128)
        sl2.setflags(write=False)
        object.__setattr__(self, 'sl2', sl2)

    @property
    def triangularity_defect(self) -> float:
        return float(abs(self.sl2[1, 0]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "omega": self.omega,
            "beta": [float(self.beta.real), float(self.beta.imag)],
            "sl2": [[[float(z.real), float(z.imag)] for z in row] for row in self.sl2],
        }


def _adjugate(a: np.ndarray) -> np.ndarray:
    return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=np.complex128)


def little_group_sl2(lam: LorentzElement, p: FourVector) -> np.ndarray:
    """w = L(Λp)^{-1} A L(p), 부호 정규화 없음"""
    l_p = massless_standard_boost(p).sl2
    l_lam_p = massless_standard_boost(lam.apply(p)).sl2
    return _adjugate(l_lam_p) @ lam.sl2 @ l_p


def little_group_phase(lam: LorentzElement, p: FourVector) -> LittleGroupElement:
    """
    Little group 위상 ω(Λ, p) ∈ [0, 2π)

    Raises:
        ShellError: p 가 질량 0 전방 운동량이 아님
        ConventionError: w 의 좌하단 성분 > 1e-9 (표준 부스트 규약 불일치)
    """
    w = little_group_sl2(lam, p)
    defect = float(abs(w[1, 0]))
    if defect > TRIANGULARITY_TOL:
        raise ConventionError(f"little group element is not upper triangular (defect {defect:.3e})")
    omega = float((2.0 * np.angle(w[1, 1])) % (2.0 * np.pi))
    beta = complex(w[0, 1] / w[1, 1])
    return LittleGroupElement(omega, beta, w)


def omega_from_mat4(lam: LorentzElement, p: FourVector) -> float:
    """
    4x4 분해 W = S R_z(ω) 에서 ω 추출

    Null rotations leave the transverse part of W e_x unchanged, so
    (W_xx, W_yx) = (cos ω, sin ω).
    """
    l_p = massless_standard_boost(p)
    l_lam_p = massless_standard_boost(lam.apply(p))
    w4 = sl2_to_mat4(_adjugate(l_lam_p.sl2)) @ lam.mat4 @ l_p.mat4
    return float(np.arctan2(w4[2, 1], w4[1, 1]) % (2.0 * np.pi))
