"""
Self-Test Base Types
불변량 검사 기본 타입

Usage:
    from selftest.base import (
        CheckLevel, CheckContext, CheckOutcome, SuiteResult, InvariantCheck
    )
"""

from abc import ABC, abstractmethod
from typing import Dict, Any, List, Optional
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from qmath.sampling import make_rng


class CheckLevel(Enum):
    """검사 실패 시 처리 수준"""
    FAIL = "FAIL"  # 스위트 실패
    WARNING = "WARNING"  # 경고만


@dataclass
class CheckContext:
    """검사 실행 컨텍스트"""
    seed: int = 0
    samples: int = 20000        # Monte Carlo twirl samples
    trials: int = 1000          # random (Λ, p) draws per property
    nodes: int = 32
    chunk_size: int = 4096

    def rng(self, salt: int = 0) -> np.random.Generator:
        """검사별 독립 생성기"""
        return make_rng(self.seed + salt)

    @property
    def stat_tol(self) -> float:
        return 3.0 / np.sqrt(self.samples)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "trials": self.trials,
            "nodes": self.nodes,
            "chunk_size": self.chunk_size,
        }


@dataclass
class CheckOutcome:
    """단일 검사 결과"""
    check_name: str
    passed: bool
    level: CheckLevel
    message: str
    measured: Optional[float] = None
    tolerance: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_name": self.check_name,
            "passed": self.passed,
            "level": self.level.value,
            "message": self.message,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "details": self.details,
        }


@dataclass
class SuiteResult:
    """스위트 실행 결과"""
    passed: bool
    outcomes: List[CheckOutcome] = field(default_factory=list)

    @property
    def failures(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if not o.passed and o.level == CheckLevel.FAIL]

    @property
    def warnings(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if not o.passed and o.level == CheckLevel.WARNING]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "failures": [o.check_name for o in self.failures],
        }

    def summary(self) -> str:
        """결과 요약 문자열"""
        lines = ["=" * 60, "SELFTEST RESULTS", "=" * 60]
        for o in self.outcomes:
            status = "ok" if o.passed else o.level.value
            lines.append(f"{o.check_name + ':':<35} {status:>10}")
        lines += [
            "-" * 60,
            f"{'Passed:':<35} {str(self.passed):>10}",
            "=" * 60,
        ]
        return "\n".join(lines)


class InvariantCheck(ABC):
    """불변량 검사 기본 클래스"""

    level: CheckLevel = CheckLevel.FAIL

    @property
    @abstractmethod
    def name(self) -> str:
        """검사 이름"""
        pass

    @abstractmethod
    def run(self, context: CheckContext) -> CheckOutcome:
        """
        검사 실행

        Returns:
            CheckOutcome (통과 여부 포함)
        """
        pass

    def outcome(
        self,
        passed: bool,
        message: str,
        measured: Optional[float] = None,
        tolerance: Optional[float] = None,
        **details,
    ) -> CheckOutcome:
        return CheckOutcome(
            check_name=self.name,
            passed=bool(passed),
            level=self.level,
            message=message,
            measured=None if measured is None else float(measured),
            tolerance=tolerance,
            details=details,
        )
