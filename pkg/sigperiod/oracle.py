"""
브루트포스 오라클 - 주기점 정의를 유한 격자 위에서 그대로 평가

모든 스위치 시각, T, t′ 가 1/d 격자 위에 있으므로 x(t′ + k/d + zT) 는 격자 칸마다
일정합니다. 따라서 격자점만 보면 정의를 정확히 판정할 수 있습니다. 이 모듈은
periodicity 의 집합 연산 경로를 쓰지 않습니다.
"""

import math
from bisect import bisect_left
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .config import OracleConfig
from .errors import EmptyWordError, NonPositivePeriodError
from .models import BinaryVector, Degenerate, OraclePrimeResult
from .signal import RatLike, UPSignal
from .upset import fiber
from .utils import common_denominator, format_rat, log_progress


def _grid_denominator(x: UPSignal, *extra: Fraction) -> int:
    values: List[Fraction] = list(x.steps.times) + list(extra)
    cycle = x.cycle
    if cycle is not None:
        values += [cycle.start, cycle.period] + list(cycle.offsets)
    return common_denominator(values)


def _tail_start(x: UPSignal) -> Optional[Fraction]:
    if x.cycle is not None:
        return x.cycle.start
    return x.steps.times[-1] if x.steps.times else None


def _horizon_end(x: UPSignal, T: Fraction, tprime: Fraction, cfg: OracleConfig) -> Fraction:
    """H = max(s, t′) + horizon·max(P, T) + P + T"""
    period = x.cycle.period if x.cycle is not None else Fraction(1)
    start = _tail_start(x)
    base = tprime if start is None else max(start, tprime)
    return base + cfg.horizon_periods * max(period, T) + period + T


def _grid_word(x: UPSignal, mu: BinaryVector, origin: Fraction, d: int, count: int) -> List[bool]:
    """g[k] = (x(origin + k/d) == μ), k = 0 … count−1"""
    end = origin + Fraction(count, d)
    marks = [
        (int((time - origin) * d), x.eval(time) == mu)
        for time in x.switch_times(origin, end)
        if time > origin
    ]
    word: List[bool] = []
    current = x.eval(origin) == mu
    for index, value in marks:
        word.extend([current] * (index - len(word)))
        current = value
    word.extend([current] * (count - len(word)))
    return word


def oracle_check(
    x: UPSignal,
    mu: BinaryVector,
    T: RatLike,
    tprime: RatLike,
    cfg: Optional[OracleConfig] = None,
    verbose: bool = False,
) -> bool:
    """정의를 직접 나열해 (T, t′) 를 판정합니다.

    t′ 이하의 격자점에서 x = x(−∞+0) 를, [t′, H) 의 격자점 t ∈ T_μ^x 마다
    |z| ≤ z_bound 인 모든 t+zT ≥ t′ 에서 x = μ 를 확인합니다.

    Raises:
        NonPositivePeriodError: T <= 0
        WidthMismatchError: 폭 불일치
    """
    cfg = cfg or OracleConfig()
    T, tprime = Fraction(T), Fraction(tprime)
    if T <= 0:
        raise NonPositivePeriodError(f"T must be positive, got {format_rat(T)}")
    x.require_width(mu)
    if mu not in x.orbit():
        return False

    d = _grid_denominator(x, T, tprime)
    step = Fraction(1, d)

    # (−∞, t′] ⊆ T_{x(−∞+0)}^x : 첫 스위치 한 칸 아래까지 내려가며 확인
    first = x.first_switch()
    point = tprime
    while True:
        if x.eval(point) != x.initial_value:
            log_progress(f"   ✗ x({format_rat(point)}) ≠ x(−∞+0): (−∞, t′] 조건 실패", verbose)
            return False
        if first is None or point < first:
            break
        point -= step

    end = _horizon_end(x, T, tprime, cfg)
    count = int((end - tprime) * d)
    z_bound = cfg.z_bound or math.ceil((end - tprime) / T) + 1
    shift = int(T * d)
    reach = z_bound * shift
    log_progress(
        f"🧪 [Oracle] 격자 1/{d}, [{format_rat(tprime)}, {format_rat(end)}) 표본 {count}개, |z| <= {z_bound}", verbose
    )
    word = _grid_word(x, mu, tprime, d, count + reach + 1)

    # 잉여류(mod shift)별 거짓 격자점 위치
    falses: Dict[int, List[int]] = defaultdict(list)
    for j, value in enumerate(word):
        if not value:
            falses[j % shift].append(j)

    for k in range(count):
        if not word[k]:
            continue
        # k + zT (|z| <= z_bound, t >= t′) 중 거짓인 점이 하나라도 있으면 실패
        residue = falses[k % shift]
        index = bisect_left(residue, max(k - reach, k % shift))
        if index < len(residue) and residue[index] <= k + reach:
            log_progress(f"   ✗ t={format_rat(tprime + Fraction(k, d))} 의 이동이 T_μ 를 벗어남", verbose)
            return False
    log_progress("   ✓ 모든 표본에서 정의 성립", verbose)
    return True


def oracle_prime_scan(
    x: UPSignal,
    mu: BinaryVector,
    cfg: Optional[OracleConfig] = None,
    verbose: bool = False,
) -> OraclePrimeResult:
    """T ∈ {p, 2p, …, k_max·p} 와 첫 스위치 아래의 격자점 t′ 를 모두 훑어 가장 작은 주기를 찾습니다.

    각 T 에 대해 t′ 를 아래로 내리며 잉여류(mod T·d)별 참/거짓 개수를 유지합니다.
    어떤 잉여류도 t′ 이상에서 값이 섞이지 않으면 ℤ-이동 조건이 성립합니다.

    Returns:
        OraclePrimeResult. 주기가 없으면 period 는 None 이고 note 에 이유가 남습니다.
        퇴화한 경우(상수 신호, 끝내 꽉 차거나 비는 fiber)의 note 는 "degenerate" 로 시작합니다.
    """
    cfg = cfg or OracleConfig()
    x.require_width(mu)
    if mu not in x.orbit():
        return OraclePrimeResult(None, f"{mu} is not in the orbit")
    first = x.first_switch()
    if first is None:
        return OraclePrimeResult(None, "degenerate: constant signal, every T > 0 is a period and no least one exists")
    F = fiber(x, mu)
    p = F.minimal_eventual_period()
    if p is Degenerate.FULL:
        return OraclePrimeResult(None, "degenerate: the fiber is eventually full")
    if p is Degenerate.EMPTY:
        return OraclePrimeResult(None, "degenerate: the fiber is bounded above")

    tail_start = F.tail_start()
    k_max = max(0, math.ceil((tail_start - first) / p)) + 2
    d = _grid_denominator(x, p)
    log_progress(f"🧪 [Oracle] μ={mu}: p={format_rat(p)}, k_max={k_max}, 격자 1/{d}", verbose)
    for k in range(1, k_max + 1):
        T = k * p
        shift = int(T * d)
        lowest = first - k_max * p - Fraction(1, d)
        end = max(_horizon_end(x, T, first, cfg), tail_start + T + p)
        count = int((end - lowest) * d)
        word = _grid_word(x, mu, lowest, d, count)
        true_counts = [0] * shift
        false_counts = [0] * shift
        mixed = 0
        top = int((first - lowest) * d)
        # first 이상의 격자점은 모든 후보 t′ 에 대해 [t′, ∞) 안에 있다
        for j in range(count - 1, top - 1, -1):
            mixed += _add(word[j], j % shift, true_counts, false_counts)
        for j in range(top - 1, -1, -1):
            mixed += _add(word[j], j % shift, true_counts, false_counts)
            if mixed == 0:
                log_progress(f"   ✓ T={format_rat(T)} 수용 ({count}개 격자점)", verbose)
                return OraclePrimeResult(T)
        log_progress(f"   - T={format_rat(T)} 거부", verbose)
    return OraclePrimeResult(None, f"no multiple of {format_rat(p)} up to {k_max}x is accepted")


def oracle_prime_period(
    x: UPSignal,
    mu: BinaryVector,
    cfg: Optional[OracleConfig] = None,
    verbose: bool = False,
) -> Optional[Fraction]:
    """가장 작은 주기, 없거나 퇴화한 경우 None (이유는 oracle_prime_scan 의 note)"""
    return oracle_prime_scan(x, mu, cfg, verbose).period


def _add(value: bool, residue: int, true_counts: List[int], false_counts: List[int]) -> int:
    """잉여류에 값 하나를 추가하고, 그 류가 새로 섞이게 되면 1 을 돌려줍니다."""
    was_mixed = true_counts[residue] > 0 and false_counts[residue] > 0
    if value:
        true_counts[residue] += 1
    else:
        false_counts[residue] += 1
    now_mixed = true_counts[residue] > 0 and false_counts[residue] > 0
    return int(now_mixed and not was_mixed)


def oracle_min_word_period(word: Sequence[int]) -> int:
    """모든 q = 1 … |w| 에 대해 w[i] = w[(i+q) mod |w|] 를 직접 확인합니다.

    Raises:
        EmptyWordError: 빈 워드
    """
    n = len(word)
    if n == 0:
        raise EmptyWordError("the empty word has no rotation period")
    for q in range(1, n + 1):
        if all(word[i] == word[(i + q) % n] for i in range(n)):
            return q
    return n
