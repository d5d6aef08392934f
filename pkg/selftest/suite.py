"""
Self-Test Suite
불변량 검사 스위트

Usage:
    from selftest.suite import SelfTestSuite, create_default_suite
"""

import logging
import time
from typing import List

from qmath.errors import RelqiError
from .base import InvariantCheck, CheckContext, CheckLevel, CheckOutcome, SuiteResult
from .checks import (
    SingleTwirlCheck, BoostChannelCheck, CollectiveCodeCheck, SchurBlockCheck,
    MultiplicityCheck, PhotonInvarianceCheck, PhotonRateCheck, DistinguishabilityCheck,
    WignerCocycleCheck, ChannelIntegrityCheck, TwirlStructureCheck, MonteCarloAgreementCheck,
)


class SelfTestSuite:
    """불변량 검사 스위트"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self._checks: List[InvariantCheck] = []

    def add_check(self, check: InvariantCheck) -> "SelfTestSuite":
        """검사 추가"""
        self._checks.append(check)
        self.logger.debug(f"Added invariant check: {check.name}")
        return self

    def remove_check(self, check_name: str) -> bool:
        """검사 제거"""
        before = len(self._checks)
        self._checks = [c for c in self._checks if c.name != check_name]
        return len(self._checks) < before

    def get_checks(self) -> List[str]:
        """검사 목록"""
        return [c.name for c in self._checks]

    def run(self, context: CheckContext) -> SuiteResult:
        """
        모든 검사 실행

        A check that raises counts as failed at its own level.

        Args:
            context: 검사 컨텍스트

        Returns:
            스위트 결과
        """
        outcomes = []
        for check in self._checks:
            started = time.perf_counter()
            try:
                outcome = check.run(context)
            except RelqiError as e:
                self.logger.error(f"Check {check.name} raised {type(e).__name__}: {e}")
                outcome = CheckOutcome(check.name, False, check.level, f"{type(e).__name__}: {e}")
            elapsed = time.perf_counter() - started
            self.logger.info(
                f"{check.name}: {'ok' if outcome.passed else outcome.level.value} "
                f"({elapsed:.2f}s) {outcome.message}"
            )
            outcomes.append(outcome)

        passed = all(o.passed or o.level != CheckLevel.FAIL for o in outcomes)
        if not passed:
            self.logger.warning(f"Selftest failed: {[o.check_name for o in outcomes if not o.passed]}")
        return SuiteResult(passed=passed, outcomes=outcomes)


def create_default_suite() -> SelfTestSuite:
    """기본 스위트 생성"""
    suite = SelfTestSuite()
    suite.add_check(SingleTwirlCheck())
    suite.add_check(BoostChannelCheck())
    suite.add_check(CollectiveCodeCheck())
    suite.add_check(SchurBlockCheck())
    suite.add_check(MultiplicityCheck())
    suite.add_check(PhotonInvarianceCheck())
    suite.add_check(PhotonRateCheck())
    suite.add_check(DistinguishabilityCheck())
    suite.add_check(WignerCocycleCheck())
    suite.add_check(ChannelIntegrityCheck())
    suite.add_check(TwirlStructureCheck())
    suite.add_check(MonteCarloAgreementCheck())
    return suite
