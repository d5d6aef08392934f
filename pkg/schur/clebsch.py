"""
Clebsch-Gordan Coefficients
Racah 공식 기반 Condon-Shortley CG 계수

Half-integers are carried as ``fractions.Fraction`` so that quantum-number
arithmetic and the factorial sums stay exact; only the final square root is
taken in floating point.

Usage:
    from schur.clebsch import clebsch_gordan, half

    clebsch_gordan(half(1), half(1), 0, half(1), -half(1), 0)   # 1/√2
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from qmath.errors import DomainError

HalfInteger = Union[int, float, Fraction, str]

HALF = Fraction(1, 2)


def half(k: int) -> Fraction:
    """k/2"""
    return Fraction(k, 2)


def as_half_integer(x: HalfInteger, name: str = "value") -> Fraction:
    """
    반정수로 변환

    Raises:
        DomainError: x가 반정수가 아님
    """
    if isinstance(x, str):
        try:
            x = Fraction(x.strip())
        except ValueError:
            raise DomainError(f"{name}={x!r} is not a number") from None
    if isinstance(x, Fraction):
        twice = 2 * x
        if twice.denominator != 1:
            raise DomainError(f"{name}={x} is not a half-integer")
        return x
    twice = round(2 * float(x))
    if abs(2 * float(x) - twice) > 1e-9:
        raise DomainError(f"{name}={x} is not a half-integer")
    return Fraction(twice, 2)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise DomainError(f"{x} is not an integer")
    return int(x)


def format_half(x: HalfInteger) -> str:
    """'3/2', '1', '0' 형식"""
    return str(as_half_integer(x))


def check_triangle(j1: Fraction, j2: Fraction, j: Fraction) -> None:
    """(j1, j2, j) 삼각 조건과 정수성 검사"""
    if min(j1, j2, j) < 0:
        raise DomainError(f"negative angular momentum in ({j1}, {j2}, {j})")
    if not abs(j1 - j2) <= j <= j1 + j2:
        raise DomainError(f"triangle condition fails for ({j1}, {j2}, {j})")
    if (j1 + j2 + j).denominator != 1:
        raise DomainError(f"j1 + j2 + j must be an integer for ({j1}, {j2}, {j})")


def _check_projection(j: Fraction, m: Fraction) -> None:
    if abs(m) > j or (j - m).denominator != 1:
        raise DomainError(f"projection m={m} is not admissible for j={j}")


@lru_cache(maxsize=4096)
def _racah(j1: Fraction, j2: Fraction, j: Fraction, m1: Fraction, m2: Fraction) -> float:
    m = m1 + m2
    f = math.factorial
    prefactor = Fraction(
        _as_int(2 * j + 1) * f(_as_int(j + j1 - j2)) * f(_as_int(j - j1 + j2)) * f(_as_int(j1 + j2 - j)),
        f(_as_int(j1 + j2 + j + 1)),
    )
    prefactor *= (
        f(_as_int(j + m)) * f(_as_int(j - m))
        * f(_as_int(j1 - m1)) * f(_as_int(j1 + m1))
        * f(_as_int(j2 - m2)) * f(_as_int(j2 + m2))
    )

    k_min = max(0, _as_int(j2 - j - m1), _as_int(j1 + m2 - j))
    k_max = min(_as_int(j1 + j2 - j), _as_int(j1 - m1), _as_int(j2 + m2))
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        denom = (
            f(k) * f(_as_int(j1 + j2 - j) - k) * f(_as_int(j1 - m1) - k)
            * f(_as_int(j2 + m2) - k) * f(_as_int(j - j2 + m1) + k) * f(_as_int(j - j1 - m2) + k)
        )
        total += Fraction((-1) ** k, denom)

    if total == 0:
        return 0.0
    magnitude = math.sqrt(prefactor * total * total)
    return magnitude if total > 0 else -magnitude


def clebsch_gordan(
    j1: HalfInteger,
    j2: HalfInteger,
    j: HalfInteger,
    m1: HalfInteger,
    m2: HalfInteger,
    m: HalfInteger,
) -> float:
    """
    ⟨j1 m1; j2 m2 | j m⟩ (Condon-Shortley)

    Returns 0 when m != m1 + m2.

    Raises:
        DomainError: 삼각 조건 위반, 허용되지 않는 투영
    """
    j1, j2, j = (as_half_integer(x, "j") for x in (j1, j2, j))
    m1, m2, m = (as_half_integer(x, "m") for x in (m1, m2, m))
    check_triangle(j1, j2, j)
    _check_projection(j1, m1)
    _check_projection(j2, m2)
    _check_projection(j, m)
    if m != m1 + m2:
        return 0.0
    return _racah(j1, j2, j, m1, m2)
