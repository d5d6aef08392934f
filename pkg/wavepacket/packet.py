"""
Gaussian Momentum Wavepackets
가우시안 운동량 파속과 구별가능성 겹침

ψ(p) = C exp(-|p - p̄|² / 2Δ²) with the invariant measure
dμ(p) = d³p / ((2π)³ 2p⁰), momenta in units of mc and lengths in ħ/mc.

Usage:
    from wavepacket.packet import make_packet, overlap, min_separation, to_angstrom

    packet = make_packet(1e-3)
    value = overlap(packet, 4000.0)           # ≈ exp(-4)
    a_min = min_separation(1e-8)
    print(to_angstrom(a_min, PROTON_MASS_MEV))
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Any, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy import constants
from scipy.optimize import bisect

from qmath.errors import AccuracyError, DomainError, RegimeError

logger = logging.getLogger(__name__)

DEFAULT_NODES = 32
MAX_DELTA = 0.2
NORM_TOL = 1e-8
OVERLAP_TOL = 1e-6
DISTINGUISHABILITY_THRESHOLD = 0.01
MAX_CONTOUR_SHIFT = 0.5
MAX_AXIAL_NODES = 128

HBAR_C_MEV_FM = constants.physical_constants["reduced Planck constant times c in MeV fm"][0]
PROTON_MASS_MEV = constants.physical_constants["proton mass energy equivalent in MeV"][0]
ANGSTROM_PER_FM = constants.femto / constants.angstrom


@lru_cache(maxsize=16)
def _hermite_rule(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = hermgauss(nodes)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """
    운동량 적분 격자

    ``probs`` are the normalized node weights of dμ |ψ|², summing to one.
    """
    nodes: int
    momenta: np.ndarray   # (nodes³, 3)
    probs: np.ndarray     # (nodes³,)

    @property
    def size(self) -> int:
        return int(self.probs.shape[0])


def _raw_grid(delta: float, mean: np.ndarray, nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """Tensor Gauss-Hermite 노드와 dμ 가중치 (C 미포함)"""
    x, w = _hermite_rule(nodes)
    gx, gy, gz = np.meshgrid(x, x, x, indexing='ij')
    momenta = mean + delta * np.column_stack([gx.ravel(), gy.ravel(), gz.ravel()])
    weights = np.einsum('i,j,k->ijk', w, w, w).ravel()
    energy = np.sqrt(1.0 + np.einsum('kj,kj->k', momenta, momenta))
    measure = delta ** 3 * weights / ((2.0 * np.pi) ** 3 * 2.0 * energy)
    return momenta, measure


@dataclass(frozen=True, eq=False)
class GaussianPacket:
    """가우시안 파속 (Δ, 평균 운동량, 정규화 상수 C)"""
    delta: float
    mean_momentum: np.ndarray
    norm_const: float
    nodes: int = DEFAULT_NODES

    def grid(self, nodes: Optional[int] = None) -> QuadratureGrid:
        """주어진 노드 수의 정규화 격자"""
        n = self.nodes if nodes is None else int(nodes)
        if n == self.nodes:
            return self.default_grid
        return self._build_grid(n)

    @cached_property
    def default_grid(self) -> QuadratureGrid:
        return self._build_grid(self.nodes)

    def _build_grid(self, n: int) -> QuadratureGrid:
        momenta, measure = _raw_grid(self.delta, self.mean_momentum, n)
        probs = self.norm_const ** 2 * measure
        momenta.setflags(write=False)
        probs.setflags(write=False)
        return QuadratureGrid(n, momenta, probs)

    def norm(self, nodes: Optional[int] = None) -> float:
        """∫ dμ |ψ|²"""
        return float(np.sum(self.grid(nodes).probs))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta": self.delta,
            "mean_momentum": [float(c) for c in self.mean_momentum],
            "norm_const": self.norm_const,
            "nodes": self.nodes,
        }


def make_packet(
    delta: float,
    mean_momentum: Sequence[float] = (0.0, 0.0, 0.0),
    nodes: int = DEFAULT_NODES,
    max_delta: float = MAX_DELTA,
) -> GaussianPacket:
    """
    파속 생성 (정규화 상수는 구적법으로 계산)

    Args:
        delta: 운동량 퍼짐 Δ (mc 단위)
        mean_momentum: 평균 운동량
        nodes: 축당 Gauss-Hermite 노드 수
        max_delta: 비상대론적 퍼짐 상한

    Raises:
        RegimeError: delta가 (0, max_delta) 밖
        AccuracyError: 노드 두 배 시 정규화 변화 > 1e-8
    """
    if not 0.0 < delta < max_delta:
        raise RegimeError(f"delta must lie in (0, {max_delta}), got {delta}")
    mean = np.asarray(mean_momentum, dtype=np.float64).reshape(3)
    mean.setflags(write=False)

    _, measure = _raw_grid(delta, mean, nodes)
    norm_const = float(1.0 / np.sqrt(np.sum(measure)))
    packet = GaussianPacket(float(delta), mean, norm_const, int(nodes))

    refined = packet.norm(2 * nodes)
    if abs(refined - 1.0) > NORM_TOL:
        raise AccuracyError(f"packet norm changes to {refined:.12g} under node doubling")
    logger.debug(f"make_packet: delta={delta}, C={norm_const:.6e}, refined norm={refined:.15g}")
    return packet


def _contour_shift(packet: GaussianPacket, a: float) -> float:
    """p_z → p_z - i·s, s = aΔ²/2 (상한 MAX_CONTOUR_SHIFT)"""
    return min(0.5 * a * packet.delta ** 2, MAX_CONTOUR_SHIFT)


def _axial_nodes(nodes: int, residual: float) -> int:
    """잔여 진동수 k 를 분해하는 p_z 노드 수"""
    return min(MAX_AXIAL_NODES, nodes + int(np.ceil(0.5 * residual ** 2)))


def _shifted_overlap(packet: GaussianPacket, a: float, nodes: int, axial_nodes: int,
                     shift: float) -> Tuple[complex, float]:
    """
    복소 평행이동 경로 위의 겹침 적분

    With p_z = p̄_z + Δx - i·s the phase e^{-i p_z a} folds into the
    Gaussian, leaving e^{-i k x} with k = aΔ - 2s/Δ and a constant factor
    exp(s²/Δ² - s·a - i p̄_z a). E(p)² keeps a positive real part for s < 1.

    Returns:
        (value, |value| 상한)
    """
    delta = packet.delta
    mean = packet.mean_momentum
    x, wx = _hermite_rule(nodes)
    z, wz = _hermite_rule(axial_nodes)

    gx, gy = np.meshgrid(x, x, indexing='ij')
    transverse_sq = (mean[0] + delta * gx.ravel()) ** 2 + (mean[1] + delta * gy.ravel()) ** 2
    transverse_w = np.outer(wx, wx).ravel()
    pz = mean[2] + delta * z - 1j * shift
    energy = np.sqrt(1.0 + transverse_sq[:, None] + (pz ** 2)[None, :])

    residual = a * delta - 2.0 * shift / delta
    terms = transverse_w[:, None] * (wz * np.exp(-1j * residual * z))[None, :] / energy
    scale = packet.norm_const ** 2 * delta ** 3 / ((2.0 * np.pi) ** 3 * 2.0)
    prefactor = np.exp(shift ** 2 / delta ** 2 - shift * a - 1j * mean[2] * a)

    value = complex(scale * prefactor * np.sum(terms))
    bound = float(scale * abs(prefactor) * np.sum(np.abs(terms)))
    return value, bound


def overlap_with_error(packet: GaussianPacket, a: float) -> Tuple[complex, float]:
    """
    겹침 ⟨Ψ|Ψ_a⟩ 와 노드 두 배 오차 추정

    Values whose magnitude bound is already below the doubling difference
    report the bound as their error, so tiny converged overlaps pass.

    Returns:
        (value, min(|value_2n - value_n|, 2·bound))
    """
    if a < 0:
        raise DomainError(f"separation must be nonnegative, got {a}")
    shift = _contour_shift(packet, a)
    axial = _axial_nodes(packet.nodes, a * packet.delta - 2.0 * shift / packet.delta)
    coarse, bound = _shifted_overlap(packet, a, packet.nodes, axial, shift)
    fine, _ = _shifted_overlap(packet, a, 2 * packet.nodes, 2 * axial, shift)
    error = min(abs(fine - coarse), 2.0 * bound)
    logger.debug(f"overlap a={a:.6g}: shift={shift:.3g}, axial nodes={axial}, error={error:.3e}")
    return fine, error


def overlap(packet: GaussianPacket, a: float, tol: float = OVERLAP_TOL) -> complex:
    """
    거리 a 만큼 평행이동한 파속과의 겹침

    Raises:
        AccuracyError: 노드 두 배 오차 > tol
    """
    value, error = overlap_with_error(packet, a)
    if error > tol:
        raise AccuracyError(f"overlap quadrature not converged at a={a}: estimate {error:.3e}")
    return value


def analytic_gaussian_overlap(delta: float, a: float) -> float:
    """exp(-a²Δ²/4)"""
    return float(np.exp(-(a * delta) ** 2 / 4.0))


def separation_for(packet: GaussianPacket, threshold: float = DISTINGUISHABILITY_THRESHOLD) -> float:
    """|overlap| <= threshold 를 만족하는 최소 거리 (bisection)"""
    if not 0.0 < threshold < 1.0:
        raise DomainError(f"threshold must lie in (0, 1), got {threshold}")
    def excess(a: float) -> float:
        shift = _contour_shift(packet, a)
        axial = _axial_nodes(packet.nodes, a * packet.delta - 2.0 * shift / packet.delta)
        return abs(_shifted_overlap(packet, a, packet.nodes, axial, shift)[0]) - threshold

    guess = 2.0 * np.sqrt(np.log(1.0 / threshold)) / packet.delta
    lo, hi = 0.0, 2.0 * guess
    while excess(hi) > 0:
        lo, hi = hi, 2.0 * hi
    a_min = float(bisect(excess, lo, hi, xtol=1e-12 * guess, rtol=1e-12))
    overlap(packet, a_min)
    return a_min


def min_separation(
    epsilon: float,
    threshold: float = DISTINGUISHABILITY_THRESHOLD,
    nodes: int = DEFAULT_NODES,
) -> float:
    """
    평균 운동량 0, 퍼짐 ε 파속의 최소 구별 거리 (ħ/mc 단위)

    Args:
        epsilon: 운동량 퍼짐 (0, 0.2)
        threshold: |overlap| 허용 상한
    """
    packet = make_packet(epsilon, nodes=nodes)
    a_min = separation_for(packet, threshold)
    logger.info(f"min_separation: epsilon={epsilon:g}, a_min={a_min:.6g}")
    return a_min


def compton_wavelength_angstrom(mass_mev: float) -> float:
    """환산 Compton 파장 ħ/mc (Å)"""
    if mass_mev <= 0:
        raise DomainError(f"mass must be positive, got {mass_mev}")
    return HBAR_C_MEV_FM / mass_mev * ANGSTROM_PER_FM


def to_angstrom(a: float, mass_mev: float) -> float:
    """ħ/mc 단위 길이를 Å 으로 변환"""
    return a * compton_wavelength_angstrom(mass_mev)
