"""
Error Hierarchy
relqi 예외 계층

Every error carries the process exit code the cli maps it to:
    1 - usage errors
    2 - domain errors (inputs outside an operation's guards)
    3 - accuracy errors (numerics could not certify a result)

Usage:
    from qmath.errors import DomainError, AccuracyError

    try:
        ...
    except RelqiError as e:
        sys.exit(e.exit_code)
"""


class RelqiError(Exception):
    """relqi 기본 예외"""
    exit_code = 2


# ============================================================
# Usage
# ============================================================

class UsageError(RelqiError):
    """잘못된 명령행 사용"""
    exit_code = 1


# ============================================================
# Domain family (exit 2)
# ============================================================

class DomainError(RelqiError, ValueError):
    """입력이 연산의 정의역 밖"""
    exit_code = 2


class ShapeError(DomainError):
    """차원 불일치"""


class SizeError(DomainError):
    """설정된 크기 제한 초과"""


class RegimeError(DomainError):
    """근사식의 유효 영역 밖"""


class SuperluminalError(DomainError):
    """|v| >= 1"""


class ShellError(DomainError):
    """on-shell 조건 위반"""


class CapacityError(DomainError):
    """코드 용량 초과"""


class OutOfCodeError(DomainError):
    """코드 공간 밖의 상태"""


class EmptySectorError(DomainError):
    """가중치가 없는 j 섹터"""


class IndistinguishabilityError(DomainError):
    """격자 간격이 구별 가능 조건보다 작음"""


class StateValidationError(DomainError):
    """상태 불변식 위반 (Hermitian, trace, PSD, norm)"""


class ChannelIntegrityError(DomainError):
    """trace-preserving 조건 위반"""


class FormatError(DomainError):
    """상태 파일 형식 오류"""


# ============================================================
# Accuracy family (exit 3)
# ============================================================

class AccuracyError(RelqiError, ArithmeticError):
    """수치 정확도 보장 실패"""
    exit_code = 3


class NumericalDegeneracyError(AccuracyError):
    """Wigner 회전이 유니터리 허용오차를 벗어남 (광원뿔 근처)"""


class ConventionError(AccuracyError):
    """little group 원소가 상삼각이 아님 (표준 부스트 규약 오류)"""
