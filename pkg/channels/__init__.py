"""
Channels Module
부스트 결어긋남 채널과 기준틀 트월

Usage:
    from channels import gamma, boost_channel_approx, boost_channel_exact, collective_twirl

    g = gamma(0.5, 0.05)
    approx = boost_channel_approx(g)
    exact = boost_channel_exact(0.5, make_packet(0.05))
    twirled = collective_twirl(rho, schur_basis(4), "exact-projector")
"""

from .boost import (
    GAMMA_REGIME_LIMIT,
    CHANNEL_TOL,
    GammaParam,
    BoostPrior,
    gamma,
    boost_channel_approx,
    wigner_rotation_channel,
    lorentz_channel_exact,
    boost_channel_exact,
    boost_mixture,
    residual_code_fidelity,
)
from .twirl import (
    MAX_TWIRL_QUBITS,
    DEFAULT_SAMPLES,
    TwirlMethod,
    TwirlResult,
    twirl_single,
    exact_collective_twirl,
    collective_twirl,
    dephasing_twirl,
)

__all__ = [
    # Boost
    'GAMMA_REGIME_LIMIT',
    'CHANNEL_TOL',
    'GammaParam',
    'BoostPrior',
    'gamma',
    'boost_channel_approx',
    'wigner_rotation_channel',
    'lorentz_channel_exact',
    'boost_channel_exact',
    'boost_mixture',
    'residual_code_fidelity',

    # Twirl
    'MAX_TWIRL_QUBITS',
    'DEFAULT_SAMPLES',
    'TwirlMethod',
    'TwirlResult',
    'twirl_single',
    'exact_collective_twirl',
    'collective_twirl',
    'dephasing_twirl',
]
