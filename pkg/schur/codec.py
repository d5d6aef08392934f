"""
Noiseless Subsystem Codec
H_jS 잡음없는 부분계 인코딩

The logical basis is the first ``logical_dim`` coupling paths of sector j
at the fixed weight m = j.

Usage:
    from schur.codec import make_codec, encode, decode, exchange_logical_action

    codec = make_codec(4, 0, 2)               # singlet-sector qubit
    physical = encode(codec, logical)
    recovered, weight = decode(codec, physical)
    swap_01 = exchange_logical_action(codec, 0, 1)   # diag(-1, +1)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Any, Optional, Tuple

import numpy as np

from qmath.errors import CapacityError, DomainError, OutOfCodeError, ShapeError
from qmath.linalg import swap_operator, unitarity_defect
from qmath.states import PureState
from .basis import MAX_SCHUR_QUBITS, CouplingPath, multiplicity, schur_basis
from .clebsch import HalfInteger, as_half_integer

logger = logging.getLogger(__name__)

OUT_OF_CODE_WEIGHT = 1e-6
ISOMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class NoiselessCodec:
    """잡음없는 부분계 코덱"""
    n: int
    j: Fraction
    logical_dim: int
    isometry: np.ndarray       # (2^n, logical_dim)
    fiducial_m: Fraction
    paths: Tuple[CouplingPath, ...]

    @property
    def physical_dim(self) -> int:
        return 2 ** self.n

    def to_dict(self) -> Dict[str, Any]:
        flat = self.isometry.reshape(-1)
        return {
            "n": self.n,
            "j": str(self.j),
            "fiducial_m": str(self.fiducial_m),
            "isometry": {
                "dims": [self.physical_dim, self.logical_dim],
                "entries": [[float(z.real), float(z.imag)] for z in flat],
            },
        }


def make_codec(
    n: int,
    j: HalfInteger,
    logical_dim: Optional[int] = None,
    max_qubits: int = MAX_SCHUR_QUBITS,
) -> NoiselessCodec:
    """
    코덱 생성

    Args:
        n: 물리 큐비트 수
        j: 섹터
        logical_dim: 논리 차원 (기본: multiplicity 전체)

    Raises:
        CapacityError: logical_dim > multiplicity(n, j)
    """
    j = as_half_integer(j, "j")
    mult = multiplicity(n, j)
    dim = mult if logical_dim is None else int(logical_dim)
    if dim < 1:
        raise DomainError(f"logical_dim must be positive, got {dim}")
    if dim > mult:
        raise CapacityError(f"logical_dim {dim} exceeds multiplicity {mult} of sector j={j}, n={n}")

    basis = schur_basis(n, max_qubits)
    rows = [basis.row_index(j, j, i) for i in range(dim)]
    isometry = basis.unitary[rows].conj().T.copy()

    defect = float(np.max(np.abs(isometry.conj().T @ isometry - np.eye(dim))))
    if defect > ISOMETRY_TOL:
        raise DomainError(f"codec isometry defect {defect:.3e}")
    isometry.setflags(write=False)
    paths = tuple(basis.labels[r].path for r in rows)
    logger.debug(f"make_codec: n={n}, j={j}, logical_dim={dim}/{mult}")
    return NoiselessCodec(n, j, dim, isometry, j, paths)


def encode(codec: NoiselessCodec, logical: PureState) -> PureState:
    """논리 상태 -> 물리 상태"""
    if logical.dim != codec.logical_dim:
        raise ShapeError(f"codec expects logical dim {codec.logical_dim}, got {logical.dim}")
    return PureState(codec.isometry @ logical.amplitudes)


def decode(codec: NoiselessCodec, physical: PureState) -> Tuple[PureState, float]:
    """
    물리 상태 -> (논리 상태, 코드 내 가중치)

    Raises:
        OutOfCodeError: 코드 내 가중치 < 1e-6
    """
    if physical.dim != codec.physical_dim:
        raise ShapeError(f"codec expects physical dim {codec.physical_dim}, got {physical.dim}")
    coeffs = codec.isometry.conj().T @ physical.amplitudes
    weight = float(np.real(np.vdot(coeffs, coeffs)))
    if weight < OUT_OF_CODE_WEIGHT:
        raise OutOfCodeError(f"state has in-code weight {weight:.3e}")
    return PureState(coeffs / np.sqrt(weight)), weight


def exchange_logical_action(codec: NoiselessCodec, i: int, k: int) -> np.ndarray:
    """
    큐비트 교환 SWAP(i, k) 의 논리 작용 V^dag SWAP V

    Qubit indices are 0-based.
    """
    if i == k:
        raise DomainError("exchange needs two distinct qubits")
    swap = swap_operator(codec.n, i, k)
    v = codec.isometry
    logical = v.conj().T @ swap @ v
    defect = unitarity_defect(logical)
    if defect > 1e-10:
        logger.warning(
            f"exchange ({i},{k}) leaks out of a partial codec (n={codec.n}, j={codec.j}, "
            f"dim {codec.logical_dim}/{multiplicity(codec.n, codec.j)}): defect {defect:.3e}"
        )
    return logical


def subsystem_projector(codec: NoiselessCodec) -> np.ndarray:
    """H_jR ⊗ (코드 경로) 사영자"""
    basis = schur_basis(codec.n)
    j = codec.j
    rows = []
    m = j
    while m >= -j:
        rows.extend(basis.row_index(j, m, i) for i in range(codec.logical_dim))
        m -= 1
    vecs = basis.unitary[rows].conj()
    return vecs.T @ vecs.conj()
