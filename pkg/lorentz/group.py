"""
Lorentz Group Elements
4x4 행렬과 SL(2,C) 이중 피복을 동기화한 로렌츠 변환

Conventions:
    - natural units m = c = 1, metric diag(+, -, -, -)
    - four-vector x <-> X = t I + x·σ, action X -> A X A^dag
    - boosts A = exp((ξ/2) n·σ), rotations A = exp(-i(θ/2) n·σ)
    - double-cover sign fixed so the largest-modulus entry of A has
      argument in (-π/2, π/2]

Usage:
    from lorentz.group import FourVector, boost_from_velocity, standard_boost, rotation

    boost = boost_from_velocity([0, 0, 0.6])
    p = boost.apply(FourVector.rest())        # (1.25, 0, 0, 0.75)
    l_p = standard_boost(FourVector.on_shell([2.0, 0, 0]))
"""

import logging
from dataclasses import dataclass
from typing import Dict, Any, Sequence, Tuple

import numpy as np

from qmath.errors import DomainError, ShellError, SuperluminalError
from qmath.linalg import IDENTITY_2, PAULIS
from qmath.sampling import haar_su2_sample, random_unit_vector

logger = logging.getLogger(__name__)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
SIGMA4 = np.array((IDENTITY_2,) + PAULIS)

SHELL_TOL = 1e-10
GROUP_TOL = 1e-10
SUPERLUMINAL_MARGIN = 1e-12


def pauli_dot(vec: Sequence[float]) -> np.ndarray:
    """n·σ"""
    v = np.asarray(vec, dtype=np.float64)
    return np.einsum('k,kab->ab', v, np.array(PAULIS))


# ============================================================
# FourVector
# ============================================================

@dataclass(frozen=True)
class FourVector:
    """4-벡터 (t, x, y, z), 운동량은 질량 단위"""
    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not np.all(np.isfinite([self.t, self.x, self.y, self.z])):
            raise DomainError("four-vector components must be finite")

    @classmethod
    def from_array(cls, arr: Sequence[float]) -> "FourVector":
        a = np.asarray(arr, dtype=np.float64).reshape(-1)
        if a.shape[0] != 4:
            raise DomainError(f"four-vector needs 4 components, got {a.shape[0]}")
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @classmethod
    def rest(cls) -> "FourVector":
        return cls(1.0, 0.0, 0.0, 0.0)

    @classmethod
    def on_shell(cls, momentum: Sequence[float]) -> "FourVector":
        """질량 1 입자의 on-shell 운동량 (E = sqrt(1 + |p|^2))"""
        p = np.asarray(momentum, dtype=np.float64)
        return cls(float(np.sqrt(1.0 + p @ p)), *map(float, p))

    @classmethod
    def massless(cls, momentum: Sequence[float]) -> "FourVector":
        """질량 0 운동량 (E = |p|)"""
        p = np.asarray(momentum, dtype=np.float64)
        return cls(float(np.linalg.norm(p)), *map(float, p))

    @classmethod
    def from_hermitian(cls, m: np.ndarray) -> "FourVector":
        """X = t I + x·σ 에서 성분 복원"""
        comps = 0.5 * np.real(np.einsum('mab,ba->m', SIGMA4, m))
        return cls.from_array(comps)

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z], dtype=np.float64)

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def minkowski_norm_sq(self) -> float:
        """t² - |x|²"""
        return float(self.t ** 2 - self.x ** 2 - self.y ** 2 - self.z ** 2)

    def to_hermitian(self) -> np.ndarray:
        return np.einsum('m,mab->ab', self.as_array(), SIGMA4)

    def is_massive_on_shell(self, tol: float = SHELL_TOL) -> bool:
        scale = max(1.0, self.t ** 2)
        return self.t > 0 and abs(self.minkowski_norm_sq() - 1.0) <= tol * scale

    def is_forward_null(self, tol: float = SHELL_TOL) -> bool:
        scale = max(1.0, self.t ** 2)
        return self.t > 0 and abs(self.minkowski_norm_sq()) <= tol * scale

    def to_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "x": self.x, "y": self.y, "z": self.z}


# ============================================================
# LorentzElement
# ============================================================

def canonicalize_sign(a: np.ndarray) -> np.ndarray:
    """
    이중 피복 부호 정규화

    Flips A -> -A unless the entry of largest modulus has argument in
    (-π/2, π/2].
    """
    a = np.asarray(a, dtype=np.complex128)
    phase = np.angle(a.flat[int(np.argmax(np.abs(a)))])
    if not (-np.pi / 2 < phase <= np.pi / 2):
        return -a
    return a


def sl2_to_mat4(a: np.ndarray) -> np.ndarray:
    """Λ^μ_ν = ½ tr(σ_μ A σ_ν A^dag)"""
    a = np.asarray(a, dtype=np.complex128)
    m = 0.5 * np.einsum('mab,bc,ncd,da->mn', SIGMA4, a, SIGMA4, a.conj().T)
    return np.real(m)


@dataclass(frozen=True, eq=False)
class LorentzElement:
    """
    고유 순시 로렌츠 변환

    ``mat4`` and ``sl2`` describe the same element; build instances with
    ``from_sl2`` so the two stay synchronized.
    """
    mat4: np.ndarray
    sl2: np.ndarray

    def __post_init__(self):
        mat4 = np.array(self.mat4, dtype=np.float64)
        sl2 = np.array(self.sl2, dtype=np.complex128)
        if mat4.shape != (4, 4) or sl2.shape != (2, 2):
            raise DomainError(f"bad shapes mat4={mat4.shape}, sl2={sl2.shape}")
        mat4.setflags(write=False)
        sl2.setflags(write=False)
        object.__setattr__(self, 'mat4', mat4)
        object.__setattr__(self, 'sl2', sl2)

        scale = max(1.0, float(np.max(np.abs(mat4))))
        det_defect = abs(np.linalg.det(sl2) - 1.0)
        if det_defect > GROUP_TOL * scale:
            raise DomainError(f"det sl2 = 1 violated (defect {det_defect:.3e})")
        metric_defect = float(np.max(np.abs(mat4.T @ METRIC @ mat4 - METRIC)))
        if metric_defect > GROUP_TOL * scale ** 2:
            raise DomainError(f"mat4 does not preserve the metric (defect {metric_defect:.3e})")
        if mat4[0, 0] < 1.0 - GROUP_TOL * scale:
            raise DomainError("element is not orthochronous")

    @classmethod
    def from_sl2(cls, a: np.ndarray) -> "LorentzElement":
        a = canonicalize_sign(a)
        return cls(sl2_to_mat4(a), a)

    @classmethod
    def identity(cls) -> "LorentzElement":
        return cls(np.eye(4), np.eye(2, dtype=np.complex128))

    def compose(self, other: "LorentzElement") -> "LorentzElement":
        """self ∘ other (other 먼저 적용)"""
        return LorentzElement.from_sl2(self.sl2 @ other.sl2)

    def inverse(self) -> "LorentzElement":
        a = self.sl2
        inv = np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=np.complex128)
        return LorentzElement.from_sl2(inv)

    def apply(self, x: FourVector) -> FourVector:
        """4x4 행렬 작용"""
        return FourVector.from_array(self.mat4 @ x.as_array())

    def apply_spinor(self, x: FourVector) -> FourVector:
        """스피너 작용 X -> A X A^dag"""
        a = self.sl2
        return FourVector.from_hermitian(a @ x.to_hermitian() @ a.conj().T)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mat4": self.mat4.tolist(),
            "sl2": [[[float(z.real), float(z.imag)] for z in row] for row in self.sl2],
        }


def compose(a: LorentzElement, b: LorentzElement) -> LorentzElement:
    return a.compose(b)


def inverse(a: LorentzElement) -> LorentzElement:
    return a.inverse()


def apply(a: LorentzElement, x: FourVector) -> FourVector:
    return a.apply(x)


# ============================================================
# Boosts and rotations
# ============================================================

def _unit(vec: Sequence[float]) -> Tuple[np.ndarray, float]:
    v = np.asarray(vec, dtype=np.float64).reshape(-1)
    if v.shape[0] != 3:
        raise DomainError(f"expected a 3-vector, got {v.shape[0]} components")
    norm = float(np.linalg.norm(v))
    return (v / norm if norm > 0 else np.array([0.0, 0.0, 1.0])), norm


def boost_from_rapidity(direction: Sequence[float], rapidity: float) -> LorentzElement:
    """방향 n, rapidity ξ의 순수 부스트 A = cosh(ξ/2) I + sinh(ξ/2) n·σ"""
    n, _ = _unit(direction)
    a = np.cosh(rapidity / 2.0) * IDENTITY_2 + np.sinh(rapidity / 2.0) * pauli_dot(n)
    return LorentzElement.from_sl2(a)


def boost_from_velocity(v: Sequence[float]) -> LorentzElement:
    """
    속도 v의 순수 부스트

    Raises:
        SuperluminalError: |v| >= 1
    """
    n, speed = _unit(v)
    if speed >= 1.0 - SUPERLUMINAL_MARGIN:
        raise SuperluminalError(f"|v| = {speed} is not below the speed of light")
    if speed == 0.0:
        return LorentzElement.identity()
    return boost_from_rapidity(n, float(np.arctanh(speed)))


def rotation(axis: Sequence[float], angle: float) -> LorentzElement:
    """능동 회전 A = cos(θ/2) I - i sin(θ/2) n·σ"""
    n, norm = _unit(axis)
    if norm == 0.0:
        raise DomainError("rotation axis must be nonzero")
    a = np.cos(angle / 2.0) * IDENTITY_2 - 1j * np.sin(angle / 2.0) * pauli_dot(n)
    return LorentzElement.from_sl2(a)


def _standard_boost_sl2(p: FourVector, inverse: bool = False) -> np.ndarray:
    """(E I ± p·σ + I) / sqrt(2E + 2)"""
    sign = -1.0 if inverse else 1.0
    big_p = p.t * IDENTITY_2 + sign * pauli_dot(p.spatial)
    return (big_p + IDENTITY_2) / np.sqrt(2.0 * p.t + 2.0)


def require_massive(p: FourVector) -> None:
    if not p.is_massive_on_shell():
        raise ShellError(
            f"momentum {p.as_array().tolist()} is not on the unit mass shell "
            f"(t^2 - |p|^2 = {p.minkowski_norm_sq():.12g})"
        )


def standard_boost(p: FourVector) -> LorentzElement:
    """
    표준 부스트 L(p): (1,0,0,0) -> p

    The spinor form is the positive Hermitian square root of E I + p·σ.

    Raises:
        ShellError: off-shell input
    """
    require_massive(p)
    return LorentzElement.from_sl2(_standard_boost_sl2(p))


def standard_boost_inverse_sl2(p: FourVector) -> np.ndarray:
    """L(p)^{-1} 스피너 형식 (검증 없음)"""
    return _standard_boost_sl2(p, inverse=True)


def rotation_angle_from_mat4(mat4: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    순수 회전 4x4 행렬에서 (축, 각) 추출, 각은 [0, π]

    Used as an oracle independent of the spinor extraction.
    """
    r = np.asarray(mat4, dtype=np.float64)[1:, 1:]
    cos_angle = np.clip((np.trace(r) - 1.0) / 2.0, -1.0, 1.0)
    angle = float(np.arccos(cos_angle))
    axis = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    norm = np.linalg.norm(axis)
    if norm < 1e-12:
        if angle < 1e-6:
            return np.array([0.0, 0.0, 1.0]), 0.0
        # angle π: axis from the symmetric part
        sym = 0.5 * (r + np.eye(3))
        col = int(np.argmax(np.diag(sym)))
        axis = sym[:, col] / np.sqrt(sym[col, col])
        return axis, angle
    return axis / norm, angle


def random_element(rng: np.random.Generator, max_rapidity: float = 1.0) -> LorentzElement:
    """
    무작위 로렌츠 변환: 균등 방향 부스트 ∘ Haar 회전

    Rapidity is uniform on [0, max_rapidity].
    """
    boost = boost_from_rapidity(random_unit_vector(rng), float(rng.uniform(0.0, max_rapidity)))
    return boost.compose(LorentzElement.from_sl2(haar_su2_sample(rng)))
