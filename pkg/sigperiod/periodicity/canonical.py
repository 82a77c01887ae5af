"""
정규 fiber 형태 (−∞,t0) ∪ [t1,t0+T) ∪ [t1+T,t0+2T) ∪ … 의 생성과 판별
"""

from fractions import Fraction
from typing import Optional, Tuple

from ..errors import PreconditionViolatedError
from ..models import BinaryVector
from ..signal import RatLike, UPSignal
from ..upset import TailView, UPSet, fiber, make_upset
from ..utils import format_rat
from .periodic_point import check_periodic_point, require_positive_period

CanonicalTriple = Tuple[Fraction, Fraction, Fraction]


def canonical_union(t0: RatLike, t1: RatLike, T: RatLike) -> UPSet:
    """(−∞,t0) ∪ ⋃_{k≥0} [t1+kT, t0+(k+1)T) 를 UPSet 으로 만듭니다.

    t0 = t1 도 허용합니다 (이 경우 결과는 ℝ).

    Raises:
        NonPositivePeriodError: T <= 0
        PreconditionViolatedError: t0 <= t1 < t0 + T 가 아닌 경우
    """
    T = require_positive_period(T)
    t0, t1 = Fraction(t0), Fraction(t1)
    if not t0 <= t1 < t0 + T:
        raise PreconditionViolatedError(
            f"expected t0 <= t1 < t0 + T, got t0={format_rat(t0)}, t1={format_rat(t1)}, T={format_rat(T)}"
        )
    return make_upset(initial_ray=t0, tail=TailView(t1, T, ((Fraction(0), t0 + T - t1),)))


def detect_canonical_fiber(x: UPSignal, mu: BinaryVector) -> Optional[CanonicalTriple]:
    """T_μ^x 가 정규 형태와 정확히 같으면 (t0, t1, T) 를 돌려줍니다.

    이 경우 T 는 소수 주기이고 허용 t′ 는 정확히 [t1−T, t0) 입니다.
    """
    x.require_width(mu)
    F = fiber(x, mu)
    t0 = F.initial_ray
    if not isinstance(t0, Fraction):
        return None
    T = F.minimal_eventual_period()
    if not isinstance(T, Fraction):
        return None
    t1 = F.steps.next_switch_after(t0)
    if t1 is None or not t0 < t1 < t0 + T:
        return None
    if not F.equals(canonical_union(t0, t1, T)):
        return None
    return t0, t1, T


def check_theorem75b(x: UPSignal, mu: BinaryVector, T_prime: RatLike, t_second: RatLike) -> bool:
    """정규 fiber 에서 받아들여진 (T′, t″) 가 T′ ≥ T, t″ ∈ [t1−T′, t0) 를 만족하는지 확인합니다.

    (T′, t″) 가 주기점 조건을 만족하지 않으면 결론이 요구되지 않으므로 True 입니다.

    Raises:
        PreconditionViolatedError: T_μ^x 가 정규 형태가 아닌 경우
    """
    triple = detect_canonical_fiber(x, mu)
    if triple is None:
        raise PreconditionViolatedError(f"the fiber of {mu} is not in canonical form")
    t0, t1, T = triple
    T_prime, t_second = Fraction(T_prime), Fraction(t_second)
    if not check_periodic_point(x, mu, T_prime, t_second):
        return True
    return T_prime >= T and t1 - T_prime <= t_second < t0
