"""
Group Twirls
미지 기준틀에 대한 균등 평균 (단일 / 집단 / 공통축 위상)

Exact twirls are closed forms: I/2 for one qubit, Schur-block replacement
ρ_jR -> I/(2j+1) for collective SU(2), and total-S_z sector projection for
collective phases. Monte Carlo twirls average over seeded Haar draws, one
Philox substream per chunk, reduced in chunk order.

Usage:
    from channels.twirl import twirl_single, collective_twirl, TwirlMethod

    result = twirl_single(rho, TwirlMethod.EXACT)
    mc = collective_twirl(rho, schur_basis(2), "monte-carlo", samples=100000, seed=7)
    print(mc.output, mc.stat_tol)
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Any, Optional, Union

import numpy as np

from qmath.errors import DomainError, ShapeError, SizeError
from qmath.sampling import DEFAULT_CHUNK_SIZE, chunk_counts, haar_su2_batch, spawn_generators
from qmath.states import DensityMatrix
from schur.basis import SchurBasis, multiplicity

logger = logging.getLogger(__name__)

MAX_TWIRL_QUBITS = 8
DEFAULT_SAMPLES = 100000
MC_MEMORY_BYTES = 64 * 2 ** 20


class TwirlMethod(Enum):
    """트월 계산 방식"""
    EXACT = "exact-projector"
    MONTE_CARLO = "monte-carlo"

    @classmethod
    def parse(cls, value: Union[str, "TwirlMethod"]) -> "TwirlMethod":
        if isinstance(value, cls):
            return value
        aliases = {"exact": cls.EXACT, "mc": cls.MONTE_CARLO}
        key = str(value).strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown twirl method '{value}'") from None


@dataclass(frozen=True, eq=False)
class TwirlResult:
    """트월 결과"""
    output: DensityMatrix
    method: TwirlMethod
    samples: int = 0
    stat_tol: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        result = {"method": self.method.value, "output_state": self.output.to_dict()}
        if self.method is TwirlMethod.MONTE_CARLO:
            result["samples"] = self.samples
            result["stat_tol"] = self.stat_tol
        return result


def _stat_tol(samples: int) -> float:
    return 3.0 / np.sqrt(samples)


# ============================================================
# Monte Carlo kernels
# ============================================================

def _collective_conjugate_sum(u: np.ndarray, rho: np.ndarray, n: int) -> np.ndarray:
    """Σ_k u_k^{⊗n} ρ u_k^{⊗n dag}, applied qubit by qubit"""
    k, d = u.shape[0], rho.shape[0]
    t = np.broadcast_to(rho, (k, d, d)).copy()
    for q in range(n):
        left, right = 2 ** q, 2 ** (n - q - 1)
        t = np.einsum('kab,klbrc->klarc', u, t.reshape(k, left, 2, right, d)).reshape(k, d, d)
        t = np.einsum('kab,kxlbr->kxlar', u.conj(), t.reshape(k, d, left, 2, right)).reshape(k, d, d)
    return t.sum(axis=0)


def _monte_carlo_collective(
    rho: DensityMatrix,
    n: int,
    samples: int,
    seed: int,
    chunk_size: int,
) -> np.ndarray:
    counts = chunk_counts(samples, chunk_size)
    generators = spawn_generators(seed, len(counts))
    d = rho.dim
    sub_batch = max(1, MC_MEMORY_BYTES // (3 * 16 * d * d))

    total = np.zeros((d, d), dtype=np.complex128)
    for index, (gen, count) in enumerate(zip(generators, counts)):
        draws = haar_su2_batch(gen, count)
        for start in range(0, count, sub_batch):
            total += _collective_conjugate_sum(draws[start:start + sub_batch], rho.matrix, n)
        logger.debug(f"twirl chunk {index + 1}/{len(counts)}: {count} samples")
    return total / samples


# ============================================================
# Twirls
# ============================================================

def twirl_single(
    rho: DensityMatrix,
    method: Union[str, TwirlMethod] = TwirlMethod.EXACT,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> TwirlResult:
    """
    단일 큐비트 트월 ∫dU U ρ U^dag

    Exact method returns I/2; Monte Carlo reports stat_tol = 3/sqrt(samples).
    """
    if rho.dim != 2:
        raise ShapeError(f"twirl_single acts on a qubit, got dim {rho.dim}")
    method = TwirlMethod.parse(method)
    if method is TwirlMethod.EXACT:
        return TwirlResult(DensityMatrix.maximally_mixed(2), method)
    out = _monte_carlo_collective(rho, 1, samples, seed, chunk_size)
    return TwirlResult(DensityMatrix.from_matrix(out), method, samples, _stat_tol(samples))


def exact_collective_twirl(rho: DensityMatrix, schur: SchurBasis) -> DensityMatrix:
    """
    Schur 블록 치환에 의한 정확한 집단 트월

    Each j-block B becomes I/(2j+1) ⊗ tr_R B and blocks between different
    j vanish.
    """
    m = schur.to_schur(rho.matrix)
    out = np.zeros_like(m)
    for j in schur.spins:
        sl = schur.block_slice(j)
        dim_r, mult = int(2 * j + 1), multiplicity(schur.n, j)
        block = m[sl, sl].reshape(dim_r, mult, dim_r, mult)
        reduced = np.einsum('aiaj->ij', block)
        out[sl, sl] = np.kron(np.eye(dim_r) / dim_r, reduced)
    return DensityMatrix.from_matrix(schur.from_schur(out))


def collective_twirl(
    rho: DensityMatrix,
    schur: Optional[SchurBasis],
    method: Union[str, TwirlMethod] = TwirlMethod.EXACT,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    max_qubits: int = MAX_TWIRL_QUBITS,
) -> TwirlResult:
    """
    N 큐비트 집단 트월 ∫dU U^{⊗N} ρ U^{⊗N dag}

    Raises:
        SizeError: exact method with N > max_qubits
        ShapeError: SchurBasis 큐비트 수 불일치
    """
    n = rho.n_qubits
    method = TwirlMethod.parse(method)
    if method is TwirlMethod.EXACT:
        if n > max_qubits:
            raise SizeError(f"exact collective twirl capped at {max_qubits} qubits, got {n}")
        if schur is None or schur.n != n:
            raise ShapeError(f"exact twirl of {n} qubits needs the Schur basis for n={n}")
        return TwirlResult(exact_collective_twirl(rho, schur), method)

    out = _monte_carlo_collective(rho, n, samples, seed, chunk_size)
    logger.info(f"collective_twirl: n={n}, {samples} Monte Carlo samples, seed={seed}")
    return TwirlResult(DensityMatrix.from_matrix(out), method, samples, _stat_tol(samples))


def _excitation_counts(n: int) -> np.ndarray:
    return np.array([bin(x).count("1") for x in range(2 ** n)])


def dephasing_twirl(
    rho: DensityMatrix,
    method: Union[str, TwirlMethod] = TwirlMethod.EXACT,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> TwirlResult:
    """
    공통축 회전 (집단 위상) 트월

    Exact method keeps only coherences inside each total-S_z sector.
    """
    n = rho.n_qubits
    method = TwirlMethod.parse(method)
    weight = _excitation_counts(n)
    diff = weight[:, None] - weight[None, :]
    if method is TwirlMethod.EXACT:
        out = np.where(diff == 0, rho.matrix, 0.0)
        return TwirlResult(DensityMatrix.from_matrix(out), method)

    shifts = np.arange(-n, n + 1)
    phase_sum = np.zeros(shifts.shape[0], dtype=np.complex128)
    counts = chunk_counts(samples, chunk_size)
    for gen, count in zip(spawn_generators(seed, len(counts)), counts):
        phi = gen.uniform(0.0, 2.0 * np.pi, count)
        phase_sum += np.exp(1j * np.outer(shifts, phi)).sum(axis=1)
    factor = (phase_sum / samples)[diff + n]
    out = rho.matrix * factor
    return TwirlResult(DensityMatrix.from_matrix(out), method, samples, _stat_tol(samples))
