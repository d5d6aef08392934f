"""
Schur Basis
순차 CG 결합으로 만든 (C²)^⊗n 의 Schur 기저

Coupling runs strictly left to right: qubit k+1 is coupled onto the total
spin of qubits 0..k. The computational |0⟩ is m = +1/2 and qubit 0 is the
most significant bit. Rows of ``SchurBasis.unitary`` are ordered by
j descending, then m descending, then coupling path ascending, so each
j-block factors as (2j+1) x mult with m as the major index.

Usage:
    from schur.basis import schur_basis, multiplicity, logical_qubit_count

    basis = schur_basis(4)
    rho_schur = basis.to_schur(rho.matrix)
    multiplicity(8, 1)          # 28
    logical_qubit_count(8)      # 4
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Any, Iterator, List, Tuple

import numpy as np

from qmath.errors import AccuracyError, DomainError, SizeError
from qmath.linalg import spin_operators
from .clebsch import HALF, HalfInteger, as_half_integer, clebsch_gordan

logger = logging.getLogger(__name__)

MAX_SCHUR_QUBITS = 10
UNITARITY_TOL = 1e-10

CouplingPath = Tuple[Fraction, ...]


@dataclass(frozen=True)
class SchurLabel:
    """Schur 기저 행 라벨 (j, m, path)"""
    j: Fraction
    m: Fraction
    path: CouplingPath

    def to_dict(self) -> Dict[str, Any]:
        return {"j": str(self.j), "m": str(self.m), "path": [str(x) for x in self.path]}


def coupling_paths(n: int, j: HalfInteger = None) -> Iterator[CouplingPath]:
    """
    허용 결합 경로 열거 (사전순)

    A path lists the running total spin after each qubit: starts at 1/2 and
    moves by ±1/2 without going negative.
    """
    target = None if j is None else as_half_integer(j, "j")

    def extend(path: List[Fraction]) -> Iterator[CouplingPath]:
        if len(path) == n:
            if target is None or path[-1] == target:
                yield tuple(path)
            return
        last = path[-1]
        for nxt in (last - HALF, last + HALF):
            if nxt >= 0:
                yield from extend(path + [nxt])

    if n < 1:
        return
    yield from extend([HALF])


def _check_sector(n: int, j: Fraction) -> None:
    if n < 1:
        raise DomainError(f"need at least one qubit, got {n}")
    if j < 0 or 2 * j > n or (Fraction(n, 2) - j).denominator != 1:
        raise DomainError(f"j={j} is not an admissible total spin for n={n}")


def multiplicity(n: int, j: HalfInteger) -> int:
    """
    H_jS 차원 = C(n, n/2 - j) - C(n, n/2 - j - 1)

    Raises:
        DomainError: n - 2j 홀수 또는 j 범위 밖
    """
    j = as_half_integer(j, "j")
    _check_sector(n, j)
    k = int(Fraction(n, 2) - j)
    below = comb(n, k - 1) if k >= 1 else 0
    return comb(n, k) - below


def sector_spins(n: int) -> List[Fraction]:
    """n 큐비트에서 가능한 j (내림차순)"""
    return [Fraction(n - 2 * k, 2) for k in range(n // 2 + 1)]


def logical_qubit_count(n: int) -> int:
    """floor(log2 max_j mult(n, j))"""
    if n < 2:
        raise DomainError(f"logical_qubit_count needs n >= 2, got {n}")
    best = max(multiplicity(n, j) for j in sector_spins(n))
    return best.bit_length() - 1


@dataclass(frozen=True, eq=False)
class SchurBasis:
    """
    계산 기저 -> 결합 기저 유니터리

    ``unitary`` maps computational amplitudes to Schur-basis amplitudes;
    its rows are the (real) coupled basis vectors.
    """
    n: int
    unitary: np.ndarray
    labels: Tuple[SchurLabel, ...]

    @property
    def dim(self) -> int:
        return 2 ** self.n

    @property
    def spins(self) -> List[Fraction]:
        return sector_spins(self.n)

    def multiplicity(self, j: HalfInteger) -> int:
        return multiplicity(self.n, j)

    def block_slice(self, j: HalfInteger) -> slice:
        """j 블록의 행 범위 (연속)"""
        j = as_half_integer(j, "j")
        _check_sector(self.n, j)
        start = 0
        for spin in self.spins:
            size = int(2 * spin + 1) * multiplicity(self.n, spin)
            if spin == j:
                return slice(start, start + size)
            start += size
        raise DomainError(f"j={j} not present for n={self.n}")

    def row_index(self, j: HalfInteger, m: HalfInteger, path_index: int) -> int:
        """(j, m, path_index) 행 번호"""
        j = as_half_integer(j, "j")
        m = as_half_integer(m, "m")
        mult = multiplicity(self.n, j)
        if abs(m) > j or not 0 <= path_index < mult:
            raise DomainError(f"no row for j={j}, m={m}, path {path_index}")
        return self.block_slice(j).start + int(j - m) * mult + path_index

    def basis_vector(self, row: int) -> np.ndarray:
        return self.unitary[row].conj()

    def to_schur(self, matrix: np.ndarray) -> np.ndarray:
        """V M V^dag"""
        return self.unitary @ matrix @ self.unitary.conj().T

    def from_schur(self, matrix: np.ndarray) -> np.ndarray:
        """V^dag M V"""
        return self.unitary.conj().T @ matrix @ self.unitary

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "labels": [label.to_dict() for label in self.labels]}


def _couple_step(states: Dict[Tuple[CouplingPath, Fraction], np.ndarray]) -> Dict[Tuple[CouplingPath, Fraction], np.ndarray]:
    """한 큐비트 추가 결합 (새 큐비트는 최하위 비트)"""
    up = np.array([1.0, 0.0])
    down = np.array([0.0, 1.0])
    paths = sorted({path for path, _ in states})
    result = {}
    for path in paths:
        jk = path[-1]
        for j_new in (jk + HALF, jk - HALF):
            if j_new < 0:
                continue
            new_path = path + (j_new,)
            m = j_new
            while m >= -j_new:
                vec = None
                for m2, spin_vec in ((HALF, up), (-HALF, down)):
                    m1 = m - m2
                    if abs(m1) > jk:
                        continue
                    coeff = clebsch_gordan(jk, HALF, j_new, m1, m2, m)
                    if coeff == 0.0:
                        continue
                    term = coeff * np.kron(states[(path, m1)], spin_vec)
                    vec = term if vec is None else vec + term
                result[(new_path, m)] = vec
                m -= 1
    return result


@lru_cache(maxsize=None)
def schur_basis(n: int, max_qubits: int = MAX_SCHUR_QUBITS) -> SchurBasis:
    """
    n 큐비트 Schur 기저

    Raises:
        SizeError: n > max_qubits
        AccuracyError: 결과가 유니터리 허용오차 밖
    """
    if n < 1:
        raise DomainError(f"need at least one qubit, got {n}")
    if n > max_qubits:
        raise SizeError(f"Schur basis for n={n} exceeds cap {max_qubits}")

    states = {((HALF,), HALF): np.array([1.0, 0.0]), ((HALF,), -HALF): np.array([0.0, 1.0])}
    for _ in range(n - 1):
        states = _couple_step(states)

    def order(key):
        path, m = key
        return (-path[-1], -m, path)

    keys = sorted(states, key=order)
    rows = np.array([states[k] for k in keys], dtype=np.complex128)
    labels = tuple(SchurLabel(path[-1], m, path) for path, m in keys)

    defect = float(np.max(np.abs(rows @ rows.conj().T - np.eye(2 ** n))))
    if defect > UNITARITY_TOL:
        raise AccuracyError(f"Schur basis for n={n} is not unitary (defect {defect:.3e})")
    rows.setflags(write=False)
    logger.debug(f"schur_basis: n={n}, unitarity defect={defect:.2e}")
    return SchurBasis(n, rows, labels)


def total_spin_squared(n: int) -> np.ndarray:
    """J² = Jx² + Jy² + Jz²"""
    jx, jy, jz = spin_operators(n)
    return jx @ jx + jy @ jy + jz @ jz


def multiplicity_by_diagonalization(n: int, j: HalfInteger, tol: float = 1e-8) -> int:
    """J² 고유공간 차원 / (2j+1)"""
    j = as_half_integer(j, "j")
    _check_sector(n, j)
    eig = np.linalg.eigvalsh(total_spin_squared(n))
    target = float(j * (j + 1))
    count = int(np.sum(np.abs(eig - target) < tol))
    return count // int(2 * j + 1)
