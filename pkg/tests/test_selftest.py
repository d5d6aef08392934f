"""
Tests for the invariant self-test suite
"""

import pytest

from qmath import AccuracyError
from selftest import (
    BoostChannelCheck,
    CheckContext,
    CheckLevel,
    CheckOutcome,
    InvariantCheck,
    MonteCarloAgreementCheck,
    MultiplicityCheck,
    PhotonInvarianceCheck,
    PhotonRateCheck,
    SchurBlockCheck,
    SelfTestSuite,
    SingleTwirlCheck,
    WignerCocycleCheck,
    create_default_suite,
)


class _FixedCheck(InvariantCheck):
    """고정 결과 검사"""

    def __init__(self, name: str, passed: bool, level: CheckLevel = CheckLevel.FAIL):
        self._name = name
        self._passed = passed
        self.level = level

    @property
    def name(self) -> str:
        return self._name

    def run(self, context: CheckContext) -> CheckOutcome:
        return self.outcome(self._passed, "fixed")


class _RaisingCheck(InvariantCheck):

    @property
    def name(self) -> str:
        return "raising"

    def run(self, context: CheckContext) -> CheckOutcome:
        raise AccuracyError("quadrature did not converge")


# ============================================================
# Fixtures
# ============================================================

@pytest.fixture
def context():
    return CheckContext(seed=7, samples=20000, trials=20)


# ============================================================
# Suite mechanics
# ============================================================

class TestSuite:
    """스위트 실행 규칙"""

    def test_default_suite_names(self):
        names = create_default_suite().get_checks()
        assert len(names) == 12
        assert "single_twirl" in names
        assert "monte_carlo_agreement" in names

    def test_all_pass(self, context):
        suite = SelfTestSuite().add_check(_FixedCheck("a", True)).add_check(_FixedCheck("b", True))
        result = suite.run(context)
        assert result.passed
        assert result.failures == []

    def test_fail_level_fails_suite(self, context):
        suite = SelfTestSuite().add_check(_FixedCheck("a", True)).add_check(_FixedCheck("b", False))
        result = suite.run(context)
        assert not result.passed
        assert [o.check_name for o in result.failures] == ["b"]

    def test_warning_level_does_not_fail_suite(self, context):
        suite = SelfTestSuite().add_check(_FixedCheck("mc", False, CheckLevel.WARNING))
        result = suite.run(context)
        assert result.passed
        assert [o.check_name for o in result.warnings] == ["mc"]

    def test_raising_check_recorded_as_failure(self, context):
        result = SelfTestSuite().add_check(_RaisingCheck()).run(context)
        assert not result.passed
        assert "AccuracyError" in result.outcomes[0].message

    def test_remove_check(self):
        suite = create_default_suite()
        assert suite.remove_check("single_twirl")
        assert not suite.remove_check("single_twirl")
        assert len(suite.get_checks()) == 11

    def test_to_dict_and_summary(self, context):
        result = SelfTestSuite().add_check(_FixedCheck("b", False)).run(context)
        data = result.to_dict()
        assert data["failures"] == ["b"]
        assert data["outcomes"][0]["level"] == "FAIL"
        assert "SELFTEST RESULTS" in result.summary()

    def test_context_stat_tol(self):
        assert CheckContext(samples=10000).stat_tol == pytest.approx(0.03)

    def test_default_trials(self):
        assert CheckContext().trials == 1000


# ============================================================
# Individual checks
# ============================================================

class TestChecks:
    """개별 불변량 검사 (축소 컨텍스트)"""

    @pytest.mark.parametrize("check", [
        SingleTwirlCheck(n_inputs=5),
        BoostChannelCheck(),
        SchurBlockCheck(max_n=4, n_unitaries=5),
        MultiplicityCheck(max_n=6),
        PhotonInvarianceCheck(),
        PhotonRateCheck(),
        WignerCocycleCheck(),
    ], ids=lambda c: c.name)
    def test_check_passes(self, check, context):
        outcome = check.run(context)
        assert outcome.passed, outcome.message

    def test_monte_carlo_agreement_gates_suite(self, context):
        check = MonteCarloAgreementCheck()
        assert check.level is CheckLevel.FAIL
        assert check.n_inputs == 20
        outcome = check.run(context)
        assert outcome.measured <= context.stat_tol
