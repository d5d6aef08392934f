"""
Schur Block Operations
쌍 singlet 측정, j 블록 분해/조립, commutant 차원

Usage:
    from schur.operations import singlet_measurement, block_extract, sector_weights

    outcome = singlet_measurement(state, 0, 1)
    block = block_extract(rho, schur_basis(4), 0)
    print(block.weight, block.correlated)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Any, Optional, Sequence

import numpy as np
from scipy.linalg import null_space

from qmath.errors import DomainError, EmptySectorError, ShapeError
from qmath.linalg import operator_trace_distance
from qmath.states import DensityMatrix, PureState
from .basis import SchurBasis, multiplicity
from .clebsch import HalfInteger, as_half_integer

logger = logging.getLogger(__name__)

EMPTY_SECTOR_WEIGHT = 1e-12
CORRELATION_TOL = 1e-10
POST_STATE_EPS = 1e-15

SINGLET_PAIR = np.array([[0.0, 1.0], [-1.0, 0.0]]) / np.sqrt(2.0)


# ============================================================
# Pairwise singlet measurement
# ============================================================

@dataclass(frozen=True, eq=False)
class SingletOutcome:
    """쌍 singlet 사영 측정 결과"""
    prob_singlet: float
    post_singlet: Optional[PureState]
    post_orthogonal: Optional[PureState]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "prob_singlet": self.prob_singlet,
            "post_singlet": None if self.post_singlet is None else self.post_singlet.to_dict(),
            "post_orthogonal": None if self.post_orthogonal is None else self.post_orthogonal.to_dict(),
        }


def singlet_measurement(state: PureState, i: int, k: int) -> SingletOutcome:
    """
    큐비트 (i, k) 에 대한 {P_singlet, I - P_singlet} 측정

    Post-measurement states are renormalized; an outcome with vanishing
    probability has no post state.
    """
    n = state.n_qubits
    if i == k or not (0 <= i < n and 0 <= k < n):
        raise DomainError(f"invalid qubit pair ({i}, {k}) for {n} qubits")

    tensor = state.amplitudes.reshape((2,) * n)
    moved = np.moveaxis(tensor, (i, k), (0, 1))
    amp = (moved[0, 1] - moved[1, 0]) / np.sqrt(2.0)
    prob = float(np.real(np.vdot(amp, amp)))
    prob = min(max(prob, 0.0), 1.0)

    projected = np.einsum('ab,...->ab...', SINGLET_PAIR, amp)
    singlet_part = np.moveaxis(projected, (0, 1), (i, k)).reshape(-1)
    rest_part = state.amplitudes - singlet_part

    post_singlet = None
    post_orthogonal = None
    if prob > POST_STATE_EPS:
        post_singlet = PureState.from_vector(singlet_part, normalize=True)
    if 1.0 - prob > POST_STATE_EPS:
        post_orthogonal = PureState.from_vector(rest_part, normalize=True)
    return SingletOutcome(prob, post_singlet, post_orthogonal)


# ============================================================
# j-block extraction
# ============================================================

@dataclass(frozen=True, eq=False)
class BlockExtraction:
    """ρ 의 j 블록과 그 인자 (ρ_jR, σ_jS)"""
    j: Fraction
    weight: float
    rho_r: DensityMatrix
    sigma_s: DensityMatrix
    correlated: bool
    product_distance: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "j": str(self.j),
            "weight": self.weight,
            "rho_jR": self.rho_r.to_dict(),
            "sigma_jS": self.sigma_s.to_dict(),
            "correlated": self.correlated,
            "product_distance": self.product_distance,
        }


def _check_basis(rho: DensityMatrix, schur: SchurBasis) -> None:
    if rho.dim != schur.dim:
        raise ShapeError(f"state of dim {rho.dim} does not match Schur basis for n={schur.n}")


def sector_weights(rho: DensityMatrix, schur: SchurBasis) -> Dict[Fraction, float]:
    """모든 j 블록의 가중치 tr(Π_j ρ)"""
    _check_basis(rho, schur)
    diag = np.real(np.diag(schur.to_schur(rho.matrix)))
    return {j: float(np.sum(diag[schur.block_slice(j)])) for j in schur.spins}


def block_extract(rho: DensityMatrix, schur: SchurBasis, j: HalfInteger) -> BlockExtraction:
    """
    j 블록 추출과 (ρ_jR, σ_jS) 분해

    Raises:
        EmptySectorError: 블록 가중치 < 1e-12
    """
    _check_basis(rho, schur)
    j = as_half_integer(j, "j")
    sl = schur.block_slice(j)
    dim_r, mult = int(2 * j + 1), multiplicity(schur.n, j)

    block = schur.to_schur(rho.matrix)[sl, sl]
    weight = float(np.real(np.trace(block)))
    if weight < EMPTY_SECTOR_WEIGHT:
        raise EmptySectorError(f"sector j={j} has weight {weight:.3e}")

    normalized = block / weight
    t = normalized.reshape(dim_r, mult, dim_r, mult)
    rho_r = DensityMatrix.from_matrix(np.einsum('aibi->ab', t))
    sigma_s = DensityMatrix.from_matrix(np.einsum('aiaj->ij', t))
    distance = operator_trace_distance(normalized, np.kron(rho_r.matrix, sigma_s.matrix))
    return BlockExtraction(j, weight, rho_r, sigma_s, distance > CORRELATION_TOL, distance)


def assemble_block(
    schur: SchurBasis,
    j: HalfInteger,
    rho_r: DensityMatrix,
    sigma_s: DensityMatrix,
) -> DensityMatrix:
    """ρ_jR ⊗ σ_jS 를 j 블록에 배치한 물리 상태"""
    j = as_half_integer(j, "j")
    dim_r, mult = int(2 * j + 1), multiplicity(schur.n, j)
    if rho_r.dim != dim_r or sigma_s.dim != mult:
        raise ShapeError(
            f"sector j={j} needs factors of dims ({dim_r}, {mult}), got ({rho_r.dim}, {sigma_s.dim})"
        )
    full = np.zeros((schur.dim, schur.dim), dtype=np.complex128)
    sl = schur.block_slice(j)
    full[sl, sl] = np.kron(rho_r.matrix, sigma_s.matrix)
    return DensityMatrix.from_matrix(schur.from_schur(full))


# ============================================================
# Commutant
# ============================================================

def commutant_dimension(mats: Sequence[np.ndarray], tol: float = 1e-10) -> int:
    """
    {X : XA = AX, ∀A} 의 차원

    With row-major vec, vec(AX) = (A ⊗ I) vec X and vec(XA) = (I ⊗ A^T) vec X.
    """
    if not mats:
        raise DomainError("commutant of an empty set is undefined")
    d = np.asarray(mats[0]).shape[0]
    eye = np.eye(d)
    rows = [np.kron(eye, np.asarray(a).T) - np.kron(np.asarray(a), eye) for a in mats]
    return int(null_space(np.vstack(rows), rcond=tol).shape[1])
