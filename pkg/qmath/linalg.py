"""
Dense Linear Algebra
텐서곱, 부분 대각합, 충실도, 대각합 거리

Usage:
    from qmath.linalg import tensor_product, partial_trace, fidelity, trace_distance

    ab = tensor_product(PAULI_Z, PAULI_Z)
    rho_a = partial_trace(rho_ab, keep=[0], dims=[2, 2])
    f = fidelity(rho, sigma)
"""

import logging
from functools import reduce
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ShapeError, SizeError
from .states import DensityMatrix, as_complex_matrix

logger = logging.getLogger(__name__)

# Default dimension cap (2^14), see config caps.max_dim
MAX_DIM = 2 ** 14

IDENTITY_2 = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

MatrixLike = Union[np.ndarray, DensityMatrix]


def _raw(m: MatrixLike) -> np.ndarray:
    if isinstance(m, DensityMatrix):
        return m.matrix
    return as_complex_matrix(m)


def tensor_product(a: MatrixLike, b: MatrixLike, max_dim: int = MAX_DIM) -> np.ndarray:
    """
    Kronecker 곱

    Args:
        a, b: 행렬 (ndarray 또는 DensityMatrix)
        max_dim: 결과 행/열 최대 크기

    Returns:
        a ⊗ b
    """
    ma, mb = _raw(a), _raw(b)
    rows = ma.shape[0] * mb.shape[0]
    cols = ma.shape[1] * mb.shape[1]
    if max(rows, cols) > max_dim:
        raise SizeError(f"tensor product {rows}x{cols} exceeds dimension cap {max_dim}")
    return np.kron(ma, mb)


def tensor_all(mats: Iterable[MatrixLike], max_dim: int = MAX_DIM) -> np.ndarray:
    """여러 행렬의 순차 Kronecker 곱"""
    return reduce(lambda x, y: tensor_product(x, y, max_dim=max_dim), [_raw(m) for m in mats])


def tensor_power(m: MatrixLike, n: int, max_dim: int = MAX_DIM) -> np.ndarray:
    """m^{⊗n}"""
    if n < 1:
        raise ShapeError(f"tensor power needs n >= 1, got {n}")
    return tensor_all([m] * n, max_dim=max_dim)


def partial_trace(
    rho: DensityMatrix,
    keep: Sequence[int],
    dims: Sequence[int],
) -> DensityMatrix:
    """
    부분 대각합

    Args:
        rho: 합성계 밀도 행렬
        keep: 남길 인자 인덱스 (0-based)
        dims: 각 인자의 차원

    Returns:
        남긴 인자들 위의 밀도 행렬 (keep 순서를 따름)
    """
    dims = [int(d) for d in dims]
    keep = [int(k) for k in keep]
    n = len(dims)
    if int(np.prod(dims)) != rho.dim:
        raise ShapeError(f"factor dims {dims} do not multiply to {rho.dim}")
    if len(set(keep)) != len(keep) or any(k < 0 or k >= n for k in keep):
        raise ShapeError(f"keep={keep} is not a subset of factors 0..{n - 1}")

    traced = [i for i in range(n) if i not in keep]
    dk = int(np.prod([dims[i] for i in keep])) if keep else 1
    dt = int(np.prod([dims[i] for i in traced])) if traced else 1

    tensor = rho.matrix.reshape(dims + dims)
    perm = keep + traced + [n + i for i in keep] + [n + i for i in traced]
    tensor = tensor.transpose(perm).reshape(dk, dt, dk, dt)
    reduced = np.trace(tensor, axis1=1, axis2=3)
    return DensityMatrix.from_matrix(reduced)


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """PSD 행렬의 제곱근 (음의 고유값은 0으로 절단)"""
    herm = 0.5 * (m + m.conj().T)
    w, v = np.linalg.eigh(herm)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """
    Uhlmann 충실도 F = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2

    Returns:
        [0, 1] 범위 값
    """
    if rho.dim != sigma.dim:
        raise ShapeError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    s = psd_sqrt(rho.matrix)
    inner = s @ sigma.matrix @ s
    eig = np.clip(np.linalg.eigvalsh(0.5 * (inner + inner.conj().T)), 0.0, None)
    value = float(np.sum(np.sqrt(eig)) ** 2)
    return min(max(value, 0.0), 1.0)


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """
    대각합 거리 ½||rho - sigma||_1

    Returns:
        [0, 1] 범위 값
    """
    if rho.dim != sigma.dim:
        raise ShapeError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    return operator_trace_distance(rho.matrix, sigma.matrix)


def operator_trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Hermitian 행렬 간 ½||a - b||_1 (검증 없이)"""
    diff = a - b
    eig = np.linalg.eigvalsh(0.5 * (diff + diff.conj().T))
    return min(float(0.5 * np.sum(np.abs(eig))), 1.0)


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    return unitarity_defect(u) <= tol


def unitarity_defect(u: np.ndarray) -> float:
    """max |U^dag U - I|"""
    u = np.asarray(u, dtype=np.complex128)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))))


def swap_operator(n_qubits: int, i: int, k: int) -> np.ndarray:
    """
    큐비트 i, k 교환 연산자 (2^n x 2^n 순열 행렬)

    Qubit 0 is the most significant bit of the computational index.
    """
    if not (0 <= i < n_qubits and 0 <= k < n_qubits):
        raise ShapeError(f"qubit indices ({i}, {k}) out of range for {n_qubits} qubits")
    perm = list(range(n_qubits))
    perm[i], perm[k] = perm[k], perm[i]
    return permutation_operator(perm)


def permutation_operator(perm: Sequence[int]) -> np.ndarray:
    """
    큐비트 순열 연산자 P: |b_0 ... b_{n-1}> -> 큐비트 q의 값이 perm[q] 위치로 이동
    """
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ShapeError(f"{perm} is not a permutation of 0..{n - 1}")
    dim = 2 ** n
    out = np.zeros((dim, dim), dtype=np.complex128)
    for index in range(dim):
        bits = [(index >> (n - 1 - q)) & 1 for q in range(n)]
        moved = [0] * n
        for q, b in enumerate(bits):
            moved[perm[q]] = b
        target = 0
        for b in moved:
            target = (target << 1) | b
        out[target, index] = 1.0
    return out


def spin_operators(n_qubits: int) -> tuple:
    """집단 스핀 연산자 (J_x, J_y, J_z), J_a = Σ_i σ_a^{(i)} / 2"""
    dim = 2 ** n_qubits
    result = []
    for pauli in PAULIS:
        total = np.zeros((dim, dim), dtype=np.complex128)
        for q in range(n_qubits):
            factors = [IDENTITY_2] * n_qubits
            factors[q] = pauli
            total += tensor_all(factors)
        result.append(0.5 * total)
    return tuple(result)
