"""
소수 주기(prime period) 탐색
"""

import math
from fractions import Fraction

from ..models import BinaryVector, Degenerate, PeriodicityVerdict, VerdictKind
from ..signal import UPSignal
from ..upset import UPSet, fiber
from ..utils import format_rat
from .periodic_point import valid_tprime_interval


def candidate_multiples(x: UPSignal, F: UPSet, p: Fraction) -> int:
    """T = k·p 후보의 상한 k_max.

    k·p 가 첫 스위치부터 꼬리 시작까지의 거리를 넘어서면 수용 여부가 k 에 무관해지므로
    k_max = ⌈(tail_start − first_switch)/p⌉ + 2 면 충분합니다.
    """
    tail_start = F.tail_start()
    first = x.first_switch()
    if tail_start is None or first is None:
        return 2
    return max(0, math.ceil((tail_start - first) / p)) + 2


def prime_period(x: UPSignal, mu: BinaryVector) -> PeriodicityVerdict:
    """μ 의 소수 주기를 구합니다.

    모든 최종 주기는 최소 최종 주기 p 의 배수이므로 T = p, 2p, …, k_max·p 만 조사하고
    허용 t′ 구간이 처음으로 비지 않는 k 에서 멈춥니다.

    Args:
        x: 신호
        mu: 조사할 값

    Returns:
        PeriodicityVerdict (NotInOrbit | NotPeriodic | NoPrime | Prime)

    Raises:
        WidthMismatchError: μ 의 폭이 신호와 다른 경우
    """
    x.require_width(mu)
    if mu not in x.orbit():
        return PeriodicityVerdict(VerdictKind.NOT_IN_ORBIT, note=f"{mu} is not in the orbit")

    F = fiber(x, mu)
    if F.is_full():
        return PeriodicityVerdict(
            VerdictKind.NO_PRIME,
            note="the fiber is all of R: every T > 0 is a period and no least one exists",
        )

    p = F.minimal_eventual_period()
    if p is Degenerate.FULL:
        return PeriodicityVerdict(
            VerdictKind.NOT_PERIODIC,
            note="the fiber is eventually full but has a gap no shift can fill above t'",
        )
    if p is Degenerate.EMPTY:
        return PeriodicityVerdict(
            VerdictKind.NOT_PERIODIC,
            note="the fiber is bounded above, so forward shifts escape it",
        )

    k_max = candidate_multiples(x, F, p)
    for k in range(1, k_max + 1):
        window = valid_tprime_interval(x, mu, k * p)
        if window is not None:
            return PeriodicityVerdict(VerdictKind.PRIME, period=k * p, window=window)
    return PeriodicityVerdict(
        VerdictKind.NOT_PERIODIC,
        note=f"no multiple of the eventual period {format_rat(p)} up to {k_max}x admits t'",
    )
