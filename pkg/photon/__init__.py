"""
Photon Module
질량 0 little group 과 두 광자 헬리시티 코드

Usage:
    from photon import little_group_phase, photon_codec_encode, photon_codec_decode

    p = FourVector.massless([0, 0, 1])
    w = little_group_phase(lam, p)
    state = photon_codec_encode(logical, p)
    assert photon_codec_decode(apply_lorentz_photon(lam, state)).fidelity(logical) > 1 - 1e-12
"""

from .little_group import (
    FIDUCIAL_MOMENTUM,
    TRIANGULARITY_TOL,
    LittleGroupElement,
    require_massless,
    massless_standard_boost,
    little_group_sl2,
    little_group_phase,
    omega_from_mat4,
)
from .codec import (
    PAIR_HELICITY,
    PhotonMode,
    TwoPhotonState,
    apply_lorentz_photon,
    photon_codec_encode,
    photon_codec_decode,
    dephasing_logical_count,
    dephasing_capacity_bits,
    balanced_sector_dimension,
)

__all__ = [
    # Little group
    'FIDUCIAL_MOMENTUM',
    'TRIANGULARITY_TOL',
    'LittleGroupElement',
    'require_massless',
    'massless_standard_boost',
    'little_group_sl2',
    'little_group_phase',
    'omega_from_mat4',

    # Code
    'PAIR_HELICITY',
    'PhotonMode',
    'TwoPhotonState',
    'apply_lorentz_photon',
    'photon_codec_encode',
    'photon_codec_decode',
    'dephasing_logical_count',
    'dephasing_capacity_bits',
    'balanced_sector_dimension',
]
