"""
초기값이 주기점일 때의 t0, t1 유도와 결론 검증
"""

from fractions import Fraction
from typing import Tuple

from ..errors import ConstantSignalError
from ..models import Theorem76Report
from ..signal import RatLike, UPSignal
from ..upset import fiber
from .canonical import canonical_union
from .periodic_point import require_positive_period


def derive_t0_t1(x: UPSignal, T: RatLike) -> Tuple[Fraction, Fraction]:
    """t0 = 첫 스위치, t1 = t0+T 직전까지 x 가 x(t0+T−0) 로 일정한 구간의 시작.

    t1 은 t0+T 보다 엄격히 작은 마지막 스위치이며, t0 자체가 스위치이므로 항상 존재합니다.

    Raises:
        NonPositivePeriodError: T <= 0
        ConstantSignalError: 상수 신호
    """
    T = require_positive_period(T)
    t0 = x.first_switch()
    if t0 is None:
        raise ConstantSignalError("t0 and t1 are undefined for a constant signal")
    t1 = x.last_switch_before(t0 + T)
    return t0, t1


def check_theorem76(x: UPSignal, T: RatLike, tprime: RatLike) -> Theorem76Report:
    """(t0, t1) 을 유도하고 t1−T ≤ t′ < t0 < t1 과 정규 합집합 ⊆ T_{x(−∞+0)}^x 를 판정합니다.

    (T, t′) 가 실제로 주기점 조건을 만족하는지는 검사하지 않습니다. 만족할 때 두 값이
    모두 True 여야 합니다.
    """
    T = require_positive_period(T)
    tprime = Fraction(tprime)
    t0, t1 = derive_t0_t1(x, T)
    bound_ok = t1 - T <= tprime < t0 < t1
    inclusion_ok = canonical_union(t0, t1, T).subset(fiber(x, x.initial_value))
    return Theorem76Report(t0=t0, t1=t1, bound_ok=bound_ok, inclusion_ok=inclusion_ok)
