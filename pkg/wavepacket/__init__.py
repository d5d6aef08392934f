"""
Wavepacket Module
가우시안 파속, 겹침, 격자 상태

Usage:
    from wavepacket import make_packet, overlap, min_separation, make_lattice

    packet = make_packet(1e-3)
    a_min = min_separation(1e-3)              # ≈ 4.29e3 ħ/mc
    lattice = make_lattice(4, 2 * a_min, packet, spin_state)
"""

from .packet import (
    DEFAULT_NODES,
    MAX_DELTA,
    DISTINGUISHABILITY_THRESHOLD,
    PROTON_MASS_MEV,
    QuadratureGrid,
    GaussianPacket,
    make_packet,
    overlap,
    overlap_with_error,
    analytic_gaussian_overlap,
    separation_for,
    min_separation,
    compton_wavelength_angstrom,
    to_angstrom,
)
from .lattice import LatticeState, make_lattice

__all__ = [
    'DEFAULT_NODES',
    'MAX_DELTA',
    'DISTINGUISHABILITY_THRESHOLD',
    'PROTON_MASS_MEV',
    'QuadratureGrid',
    'GaussianPacket',
    'make_packet',
    'overlap',
    'overlap_with_error',
    'analytic_gaussian_overlap',
    'separation_for',
    'min_separation',
    'compton_wavelength_angstrom',
    'to_angstrom',
    'LatticeState',
    'make_lattice',
]
