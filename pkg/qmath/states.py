"""
Quantum States
순수 상태 / 밀도 행렬

Usage:
    from qmath.states import PureState, DensityMatrix

    psi = PureState.basis(0, dim=4)          # |00>
    rho = DensityMatrix.from_pure(psi)
    mixed = DensityMatrix.maximally_mixed(2)
"""

from dataclasses import dataclass, field, InitVar
from typing import Dict, Any, Optional, Sequence

import numpy as np

from .errors import StateValidationError, ShapeError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
NORM_TOL = 1e-12


def as_complex_matrix(data, name: str = "matrix") -> np.ndarray:
    """
    2D complex 행렬로 변환 (ComplexMatrix)

    Args:
        data: array-like
        name: 오류 메시지용 이름

    Returns:
        complex128 ndarray (rows x cols)
    """
    arr = np.asarray(data, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{name} must be a non-empty 2D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise StateValidationError(f"{name} has non-finite entries")
    return arr


def _qubit_count(dim: int) -> Optional[int]:
    if dim >= 1 and dim & (dim - 1) == 0:
        return dim.bit_length() - 1
    return None


@dataclass(frozen=True, eq=False)
class PureState:
    """
    순수 상태 벡터

    Amplitudes are stored as a 1D complex128 array. ``n_qubits`` is defined
    when the length is a power of two.
    """
    amplitudes: np.ndarray
    validate: InitVar[bool] = True
    validated: bool = field(init=False, default=True)

    def __post_init__(self, validate: bool):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size < 1:
            raise ShapeError("state must have at least one amplitude")
        amps.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amps)
        object.__setattr__(self, 'validated', bool(validate))
        if validate:
            if not np.all(np.isfinite(amps)):
                raise StateValidationError("state has non-finite amplitudes")
            norm = float(np.linalg.norm(amps))
            if abs(norm - 1.0) > NORM_TOL:
                raise StateValidationError(f"state is not normalized: |psi| = {norm:.15g}")

    @property
    def dim(self) -> int:
        return int(self.amplitudes.size)

    @property
    def n_qubits(self) -> int:
        n = _qubit_count(self.dim)
        if n is None:
            raise ShapeError(f"dimension {self.dim} is not a power of two")
        return n

    @classmethod
    def from_vector(cls, vec: Sequence[complex], normalize: bool = False) -> "PureState":
        """벡터에서 생성 (normalize=True면 정규화)"""
        arr = np.asarray(vec, dtype=np.complex128).reshape(-1)
        if normalize:
            norm = np.linalg.norm(arr)
            if norm == 0:
                raise StateValidationError("cannot normalize the zero vector")
            arr = arr / norm
        return cls(arr)

    @classmethod
    def basis(cls, index: int, dim: int) -> "PureState":
        """계산 기저 상태 |index>"""
        if not 0 <= index < dim:
            raise ShapeError(f"basis index {index} out of range for dim {dim}")
        arr = np.zeros(dim, dtype=np.complex128)
        arr[index] = 1.0
        return cls(arr)

    def overlap(self, other: "PureState") -> complex:
        """<self|other>"""
        if other.dim != self.dim:
            raise ShapeError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: "PureState") -> float:
        """|<self|other>|^2"""
        return float(abs(self.overlap(other)) ** 2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dims": [self.dim, 1],
            "entries": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    밀도 행렬

    Hermitian, unit trace and positive semidefinite within the module
    tolerances unless constructed with ``validate=False``.
    """
    matrix: np.ndarray
    validate: InitVar[bool] = True
    validated: bool = field(init=False, default=True)

    def __post_init__(self, validate: bool):
        mat = as_complex_matrix(self.matrix, "density matrix")
        if mat.shape[0] != mat.shape[1]:
            raise ShapeError(f"density matrix must be square, got {mat.shape}")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, 'matrix', mat)
        object.__setattr__(self, 'validated', bool(validate))
        if validate:
            self._check_invariants()

    def _check_invariants(self) -> None:
        mat = self.matrix
        herm_defect = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_defect > HERMITIAN_TOL:
            raise StateValidationError(f"density matrix not Hermitian (defect {herm_defect:.3e})")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > TRACE_TOL:
            raise StateValidationError(f"density matrix trace {trace.real:.15g} != 1")
        min_eig = float(np.min(np.linalg.eigvalsh(mat)))
        if min_eig < -PSD_TOL:
            raise StateValidationError(f"density matrix not PSD (min eigenvalue {min_eig:.3e})")

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def n_qubits(self) -> int:
        n = _qubit_count(self.dim)
        if n is None:
            raise ShapeError(f"dimension {self.dim} is not a power of two")
        return n

    @classmethod
    def from_pure(cls, state: PureState) -> "DensityMatrix":
        """|psi><psi|"""
        amps = state.amplitudes
        return cls(np.outer(amps, amps.conj()))

    @classmethod
    def from_matrix(cls, matrix, hermitize: bool = True) -> "DensityMatrix":
        """
        계산 결과로부터 생성

        Rounding asymmetry is removed with (M + M^dag)/2 before validation.
        """
        mat = as_complex_matrix(matrix)
        if hermitize:
            mat = 0.5 * (mat + mat.conj().T)
        return cls(mat)

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        """I/d"""
        return cls(np.eye(dim, dtype=np.complex128) / dim)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def purity(self) -> float:
        """tr(rho^2)"""
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def to_dict(self) -> Dict[str, Any]:
        flat = self.matrix.reshape(-1)
        return {
            "dims": [self.dim, self.dim],
            "entries": [[float(a.real), float(a.imag)] for a in flat],
        }
