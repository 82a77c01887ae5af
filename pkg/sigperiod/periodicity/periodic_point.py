"""
주기점 판정 - (−∞,t′] 초기 반직선 조건과 ℤ-이동 닫힘 조건, 허용 t′ 구간 계산
"""

from fractions import Fraction
from typing import Optional

from ..errors import NonPositivePeriodError, NotInOrbitError
from ..models import BinaryVector, NEG_INF, POS_INF, TPrimeWindow
from ..signal import RatLike, UPSignal
from ..upset import UPSet, fiber
from ..utils import format_rat


def require_positive_period(T: RatLike) -> Fraction:
    T = Fraction(T)
    if T <= 0:
        raise NonPositivePeriodError(f"T must be positive, got {format_rat(T)}")
    return T


def orbit_fiber(x: UPSignal, mu: BinaryVector) -> UPSet:
    """μ ∈ Or(x) 를 확인하고 T_μ^x 를 돌려줍니다.

    Raises:
        WidthMismatchError: 폭 불일치
        NotInOrbitError: μ ∉ Or(x)
    """
    x.require_width(mu)
    if mu not in x.orbit():
        raise NotInOrbitError(f"{mu} is not in the orbit of the signal")
    return fiber(x, mu)


def initial_ray_holds(x: UPSignal, tprime: Fraction) -> bool:
    """(−∞, t′] ⊆ T_{x(−∞+0)}^x ⇔ t′ < first_switch(x)"""
    first = x.first_switch()
    return first is None or tprime < first


def check_periodic_point(x: UPSignal, mu: BinaryVector, T: RatLike, tprime: RatLike) -> bool:
    """(T, t′) 가 μ 를 주기점으로 만드는지 판정합니다.

    ∀z∈ℤ 조건은 한 걸음 이동 닫힘 두 개로 바꿔 판정합니다 (F = T_μ^x):
    앞으로 shift(F ∩ [t′,∞), T) ⊆ F, 뒤로 shift(F ∩ [t′+T,∞), −T) ⊆ F.
    중간 점들이 모두 t′ 이상에 머무르므로 귀납적으로 모든 z 에 대해 성립합니다.

    Args:
        x: 신호
        mu: 궤도의 점 μ
        T: 주기 후보 (> 0)
        tprime: t′

    Returns:
        두 조건이 모두 성립하면 True

    Raises:
        NonPositivePeriodError, NotInOrbitError, WidthMismatchError
    """
    T = require_positive_period(T)
    tprime = Fraction(tprime)
    F = orbit_fiber(x, mu)
    if not initial_ray_holds(x, tprime):
        return False
    forward = F.clip_geq(tprime).shift(T)
    if not forward.subset(F):
        return False
    backward = F.clip_geq(tprime + T).shift(-T)
    return backward.subset(F)


def valid_tprime_interval(x: UPSignal, mu: BinaryVector, T: RatLike) -> Optional[TPrimeWindow]:
    """check_periodic_point 가 받아들이는 t′ 의 정확한 집합 [lo, hi).

    W_A = F ∖ shift(F, −T) 는 +T 상이 F 를 벗어나는 점, W_B = F ∖ shift(F, T) 는
    −T 원상이 빠진 점입니다. 구간이 반열린이라 sup 은 도달되지 않으므로
    lo = max(sup W_A, sup W_B − T) 는 닫힌 끝, hi = first_switch(x) 는 열린 끝입니다.

    Returns:
        TPrimeWindow (상수 신호면 양쪽 모두 None), 허용되는 t′ 가 없으면 None
    """
    T = require_positive_period(T)
    F = orbit_fiber(x, mu)
    hi = x.first_switch()
    if hi is None:
        return TPrimeWindow(None, None)

    escape_forward = F.difference(F.shift(-T)).sup_bound()
    escape_backward = F.difference(F.shift(T)).sup_bound()
    if escape_forward == POS_INF or escape_backward == POS_INF:
        return None
    candidates = [escape_forward]
    if escape_backward != NEG_INF:
        candidates.append(escape_backward - T)
    lo = max(candidates)
    if lo == NEG_INF:
        return TPrimeWindow(None, hi)
    if lo >= hi:
        return None
    return TPrimeWindow(Fraction(lo), hi)
