"""
주기점 fiber 안의 구간은 T 만큼 앞으로 옮겨도 fiber 안에 남는다
"""

import math
from fractions import Fraction

from ..errors import PreconditionViolatedError
from ..models import BinaryVector
from ..signal import RatLike, UPSignal
from ..upset import UPSet, fiber
from ..utils import format_rat
from .periodic_point import check_periodic_point, require_positive_period


def lemma8_closure(
    x: UPSignal,
    mu: BinaryVector,
    T: RatLike,
    tprime: RatLike,
    a: RatLike,
    b: RatLike,
) -> bool:
    """[a+kT, b+kT) ⊆ T_μ^x 를 k = 1 … K 에 대해 확인합니다.

    K 는 a+KT 가 꼬리 시작 + 꼬리 주기를 넘는 최소값입니다. 사전조건이 성립하면 결과는
    항상 True 여야 하며, False 는 구현 오류를 뜻합니다.

    Raises:
        PreconditionViolatedError: a >= b, (T, t′) 가 주기점 조건을 만족하지 않음,
            또는 [a, b) ⊄ T_μ^x ∩ [t′, ∞)
    """
    T = require_positive_period(T)
    tprime, a, b = Fraction(tprime), Fraction(a), Fraction(b)
    if a >= b:
        raise PreconditionViolatedError(f"expected a < b, got a={format_rat(a)}, b={format_rat(b)}")
    if not check_periodic_point(x, mu, T, tprime):
        raise PreconditionViolatedError(
            f"T={format_rat(T)}, t'={format_rat(tprime)} does not make {mu} a periodic point"
        )
    F = fiber(x, mu)
    if not UPSet.interval(a, b).subset(F.clip_geq(tprime)):
        raise PreconditionViolatedError(
            f"[{format_rat(a)},{format_rat(b)}) is not contained in the fiber above t'={format_rat(tprime)}"
        )

    cycle = F.steps.cycle
    tail_start = F.tail_start()
    horizon = (tail_start if tail_start is not None else a) + (cycle.period if cycle is not None else T)
    K = max(1, math.floor((horizon - a) / T) + 1)
    return all(UPSet.interval(a + k * T, b + k * T).subset(F) for k in range(1, K + 1))
