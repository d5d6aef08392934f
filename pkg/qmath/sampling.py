"""
Seeded Sampling
시드 기반 난수 스트림과 Haar SU(2) 샘플링

All Monte Carlo draws come from counter-based Philox generators spawned off a
single SeedSequence, one substream per chunk, so a run is fixed by
(seed, samples, chunk_size).

Usage:
    from qmath.sampling import make_rng, spawn_generators, haar_su2_sample

    rng = make_rng(20050104)
    u = haar_su2_sample(rng)

    for gen, count in zip(spawn_generators(seed, n_chunks), chunk_counts(samples, 4096)):
        batch = haar_su2_batch(gen, count)
"""

import logging
import math
from typing import List, Optional

import numpy as np

from .errors import DomainError
from .states import PureState, DensityMatrix

logger = logging.getLogger(__name__)

SEED_MASK = 0xFFFFFFFFFFFFFFFF
DEFAULT_CHUNK_SIZE = 4096


def make_rng(seed: int) -> np.random.Generator:
    """64비트 시드로 Philox 생성기 생성"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed) & SEED_MASK)))


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """
    독립 하위 스트림 생성

    Args:
        seed: 64비트 시드
        count: 스트림 개수 (청크 수)

    Returns:
        청크 순서대로 정렬된 Generator 목록
    """
    if count < 1:
        raise DomainError(f"need at least one substream, got {count}")
    children = np.random.SeedSequence(int(seed) & SEED_MASK).spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def chunk_counts(samples: int, chunk_size: int = DEFAULT_CHUNK_SIZE) -> List[int]:
    """샘플 수를 고정 크기 청크로 분할 (마지막 청크는 나머지)"""
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")
    if chunk_size < 1:
        raise DomainError(f"chunk_size must be positive, got {chunk_size}")
    n_chunks = math.ceil(samples / chunk_size)
    counts = [chunk_size] * n_chunks
    counts[-1] = samples - chunk_size * (n_chunks - 1)
    return counts


def _quaternion_to_su2(q: np.ndarray) -> np.ndarray:
    """unit quaternion (..., 4) -> q0 I - i (q1 σx + q2 σy + q3 σz)"""
    q0, q1, q2, q3 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    u = np.empty(q.shape[:-1] + (2, 2), dtype=np.complex128)
    u[..., 0, 0] = q0 - 1j * q3
    u[..., 0, 1] = -1j * q1 - q2
    u[..., 1, 0] = -1j * q1 + q2
    u[..., 1, 1] = q0 + 1j * q3
    return u


def haar_su2_batch(rng: np.random.Generator, count: int) -> np.ndarray:
    """
    Haar 균등 SU(2) 샘플 배치

    Four Gaussian deviates normalized to the unit 3-sphere give a uniform
    unit quaternion, which is exactly Haar on SU(2).

    Returns:
        (count, 2, 2) complex128
    """
    g = rng.standard_normal((count, 4))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return _quaternion_to_su2(g)


def haar_su2_sample(rng: np.random.Generator) -> np.ndarray:
    """Haar 균등 SU(2) 단일 샘플 (2x2)"""
    return haar_su2_batch(rng, 1)[0]


def su2_rotation_angle(u: np.ndarray) -> np.ndarray:
    """
    SU(2) 원소의 회전각 θ = 2 arccos(Re tr U / 2), [0, 2π]

    Accepts a single 2x2 matrix or a (..., 2, 2) batch.
    """
    half_trace = np.real(np.trace(u, axis1=-2, axis2=-1)) / 2.0
    return 2.0 * np.arccos(np.clip(half_trace, -1.0, 1.0))


def haar_angle_cdf(theta: np.ndarray) -> np.ndarray:
    """Haar 회전각 누적분포 (θ - sin θ) / 2π, 밀도 (1/π) sin²(θ/2)"""
    theta = np.asarray(theta, dtype=np.float64)
    return (theta - np.sin(theta)) / (2.0 * np.pi)


def random_unit_vector(rng: np.random.Generator, dim: int = 3) -> np.ndarray:
    """구면 균등 단위 벡터"""
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_pure_state(rng: np.random.Generator, dim: int) -> PureState:
    """Haar 균등 순수 상태"""
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState.from_vector(z, normalize=True)


def random_density_matrix(rng: np.random.Generator, dim: int, rank: Optional[int] = None) -> DensityMatrix:
    """
    Ginibre 앙상블 밀도 행렬 G G^dag / tr

    Args:
        rng: 생성기
        dim: 차원
        rank: Ginibre 열 수 (기본: full rank)
    """
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = g @ g.conj().T
    return DensityMatrix.from_matrix(m / np.real(np.trace(m)))
