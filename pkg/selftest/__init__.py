"""
Self-Test Module
불변량 검사 모듈

Usage:
    from selftest import (
        SelfTestSuite, CheckContext, CheckLevel, SuiteResult,
        SingleTwirlCheck, WignerCocycleCheck,
        create_default_suite
    )

    # Build a suite
    suite = SelfTestSuite()
    suite.add_check(SingleTwirlCheck(n_inputs=20))
    suite.add_check(WignerCocycleCheck(tol=1e-9))

    # Or use default
    suite = create_default_suite()

    result = suite.run(CheckContext(seed=7))
    print(result.summary())
"""

from .base import (
    CheckLevel,
    CheckContext,
    CheckOutcome,
    SuiteResult,
    InvariantCheck,
)
from .checks import (
    SingleTwirlCheck,
    BoostChannelCheck,
    CollectiveCodeCheck,
    SchurBlockCheck,
    MultiplicityCheck,
    PhotonInvarianceCheck,
    PhotonRateCheck,
    DistinguishabilityCheck,
    WignerCocycleCheck,
    ChannelIntegrityCheck,
    TwirlStructureCheck,
    MonteCarloAgreementCheck,
)
from .suite import SelfTestSuite, create_default_suite

__all__ = [
    # Base types
    'CheckLevel',
    'CheckContext',
    'CheckOutcome',
    'SuiteResult',
    'InvariantCheck',

    # Checks
    'SingleTwirlCheck',
    'BoostChannelCheck',
    'CollectiveCodeCheck',
    'SchurBlockCheck',
    'MultiplicityCheck',
    'PhotonInvarianceCheck',
    'PhotonRateCheck',
    'DistinguishabilityCheck',
    'WignerCocycleCheck',
    'ChannelIntegrityCheck',
    'TwirlStructureCheck',
    'MonteCarloAgreementCheck',

    # Suite
    'SelfTestSuite',
    'create_default_suite',
]
