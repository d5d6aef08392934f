"""
Lorentz Module
로렌츠 군 원소, 표준 부스트, Wigner 회전

Usage:
    from lorentz import FourVector, boost_from_velocity, rotation, wigner_rotation

    lam = boost_from_velocity([0, 0, 0.5])
    p = FourVector.on_shell([np.sqrt(3), 0, 0])      # E = 2 along x
    w = wigner_rotation(lam, p)                      # rotation about y
"""

from .group import (
    METRIC,
    FourVector,
    LorentzElement,
    canonicalize_sign,
    sl2_to_mat4,
    pauli_dot,
    compose,
    inverse,
    apply,
    boost_from_rapidity,
    boost_from_velocity,
    rotation,
    standard_boost,
    standard_boost_inverse_sl2,
    require_massive,
    rotation_angle_from_mat4,
    random_element,
)
from .wigner import (
    WignerRotation,
    axis_angle_from_su2,
    wigner_rotation,
    wigner_su2_batch,
)

__all__ = [
    # Group
    'METRIC',
    'FourVector',
    'LorentzElement',
    'canonicalize_sign',
    'sl2_to_mat4',
    'pauli_dot',
    'compose',
    'inverse',
    'apply',
    'boost_from_rapidity',
    'boost_from_velocity',
    'rotation',
    'standard_boost',
    'standard_boost_inverse_sl2',
    'require_massive',
    'rotation_angle_from_mat4',
    'random_element',

    # Wigner
    'WignerRotation',
    'axis_angle_from_su2',
    'wigner_rotation',
    'wigner_su2_batch',
]
