"""
궁극적 주기 계단 함수 - 신호(UPSignal)와 시간 집합(UPSet)이 공유하는 표현

값은 초기값 init, 유한한 transient 스위치 목록, 선택적인 반복 cycle 로 주어지며
모든 구간은 반열린 [t_k, t_{k+1}) 입니다.
"""

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Generic, List, Optional, Sequence, Set, Tuple, TypeVar

from .errors import BadPatternError, NonIncreasingTimesError, NonPositivePeriodError
from .utils import format_rat, lcm_rat, min_word_period

V = TypeVar("V")
W = TypeVar("W")

Switch = Tuple[Fraction, Any]


@dataclass(frozen=True)
class Cycle(Generic[V]):
    """start 부터 period 마다 반복되는 패턴 (pattern[0] 의 오프셋은 0)"""

    start: Fraction
    period: Fraction
    pattern: Tuple[Tuple[Fraction, V], ...]

    @cached_property
    def offsets(self) -> Tuple[Fraction, ...]:
        return tuple(offset for offset, _ in self.pattern)


@dataclass(frozen=True)
class StepFunction(Generic[V]):
    """정규형 계단 함수. 직접 만들지 말고 build_steps 를 사용하세요."""

    init: V
    transient: Tuple[Tuple[Fraction, V], ...] = ()
    cycle: Optional[Cycle[V]] = None

    @cached_property
    def times(self) -> Tuple[Fraction, ...]:
        return tuple(time for time, _ in self.transient)

    def value_at(self, t: Fraction) -> V:
        cycle = self.cycle
        if cycle is not None and t >= cycle.start:
            offset = (t - cycle.start) % cycle.period
            return cycle.pattern[bisect_right(cycle.offsets, offset) - 1][1]
        index = bisect_right(self.times, t) - 1
        return self.init if index < 0 else self.transient[index][1]

    def left_limit(self, t: Fraction) -> V:
        cycle = self.cycle
        if cycle is not None and t > cycle.start:
            offset = (t - cycle.start) % cycle.period
            if offset == 0:
                return cycle.pattern[-1][1]
            return cycle.pattern[bisect_left(cycle.offsets, offset) - 1][1]
        index = bisect_left(self.times, t) - 1
        return self.init if index < 0 else self.transient[index][1]

    def first_switch(self) -> Optional[Fraction]:
        if self.transient:
            return self.transient[0][0]
        if self.cycle is not None:
            return self.cycle.start
        return None

    def last_switch_before(self, u: Fraction) -> Optional[Fraction]:
        """u 보다 엄격히 작은 마지막 스위치 시각"""
        cycle = self.cycle
        if cycle is not None and u > cycle.start:
            k = math.floor((u - cycle.start) / cycle.period)
            base = cycle.start + k * cycle.period
            index = bisect_left(cycle.offsets, u - base) - 1
            if index >= 0:
                return base + cycle.offsets[index]
            return base - cycle.period + cycle.offsets[-1]
        index = bisect_left(self.times, u) - 1
        return None if index < 0 else self.times[index]

    def next_switch_after(self, u: Fraction) -> Optional[Fraction]:
        """u 보다 엄격히 큰 첫 스위치 시각"""
        index = bisect_right(self.times, u)
        if index < len(self.times):
            return self.times[index]
        cycle = self.cycle
        if cycle is None:
            return None
        if u < cycle.start:
            return cycle.start
        k = math.floor((u - cycle.start) / cycle.period)
        base = cycle.start + k * cycle.period
        index = bisect_right(cycle.offsets, u - base)
        if index < len(cycle.offsets):
            return base + cycle.offsets[index]
        return base + cycle.period

    def switches_in(self, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> List[Fraction]:
        """[lo, hi) 안의 모든 스위치 시각 (cycle 은 펼쳐서 나열)"""
        found = [
            time for time in self.times
            if (lo is None or time >= lo) and (hi is None or time < hi)
        ]
        cycle = self.cycle
        if cycle is None:
            return found
        if hi is None:
            raise ValueError("a periodic tail has infinitely many switches; give an upper bound")
        begin = cycle.start if lo is None else max(lo, cycle.start)
        k = math.floor((begin - cycle.start) / cycle.period)
        while True:
            base = cycle.start + k * cycle.period
            if base >= hi:
                break
            for offset in cycle.offsets:
                time = base + offset
                if time >= hi:
                    break
                if time >= begin:
                    found.append(time)
            k += 1
        return found

    def final_value(self) -> V:
        """cycle 이 없을 때 충분히 큰 t 에서의 값"""
        return self.transient[-1][1] if self.transient else self.init

    def values(self) -> Set[V]:
        found = {self.init}
        found.update(value for _, value in self.transient)
        if self.cycle is not None:
            found.update(value for _, value in self.cycle.pattern)
        return found

    def is_constant(self) -> bool:
        return not self.transient and self.cycle is None

    def shift(self, delta: Fraction) -> "StepFunction[V]":
        cycle = self.cycle
        return StepFunction(
            self.init,
            tuple((time + delta, value) for time, value in self.transient),
            None if cycle is None else Cycle(cycle.start + delta, cycle.period, cycle.pattern),
        )

    def map(self, fn: Callable[[V], W]) -> "StepFunction[W]":
        cycle = self.cycle
        return build_steps(
            fn(self.init),
            [(time, fn(value)) for time, value in self.transient],
            None if cycle is None else Cycle(
                cycle.start, cycle.period, tuple((offset, fn(value)) for offset, value in cycle.pattern)
            ),
        )


def _merge_runs(init: Any, items: Sequence[Switch]) -> List[Switch]:
    """직전 값과 같은 스위치를 제거합니다."""
    merged: List[Switch] = []
    previous = init
    for time, value in items:
        if value != previous:
            merged.append((time, value))
            previous = value
    return merged


def _canonical_cycle(init: Any, transient: List[Switch], start: Fraction,
                     segments: List[Tuple[Fraction, Any]]) -> StepFunction:
    # 인접한 같은 값 구간 병합
    merged: List[Tuple[Fraction, Any]] = []
    for length, value in segments:
        if merged and merged[-1][1] == value:
            merged[-1] = (merged[-1][0] + length, value)
        else:
            merged.append((length, value))

    # 상수 꼬리는 cycle 없이 표현
    if len(merged) == 1:
        transient = _merge_runs(init, transient + [(start, merged[0][1])])
        return StepFunction(init, tuple(transient), None)

    # 한 주기의 끝과 다음 주기의 시작이 같은 값이면 시작점을 한 구간 뒤로 민다
    if merged[0][1] == merged[-1][1]:
        head_length, head_value = merged[0]
        transient = _merge_runs(init, transient + [(start, head_value)])
        start += head_length
        merged = merged[1:-1] + [(merged[-1][0] + head_length, head_value)]

    # 최소 주기로 축약
    merged = merged[:min_word_period(merged)]

    # cycle.start 는 실제 스위치여야 한다
    before = transient[-1][1] if transient else init
    if merged[0][1] == before:
        start += merged[0][0]
        merged = merged[1:] + merged[:1]

    # transient 끝부분이 주기 법칙을 따르면 가능한 만큼 시작점을 앞당긴다
    while transient and transient[-1] == (start - merged[-1][0], merged[-1][1]):
        start -= merged[-1][0]
        merged = merged[-1:] + merged[:-1]
        transient = transient[:-1]

    pattern = []
    offset = Fraction(0)
    for length, value in merged:
        pattern.append((offset, value))
        offset += length
    return StepFunction(init, tuple(transient), Cycle(start, offset, tuple(pattern)))


def build_steps(init: V, transient: Sequence[Switch] = (), cycle: Optional[Cycle] = None) -> StepFunction[V]:
    """검증 후 정규형 계단 함수를 만듭니다.

    정규형: 연속한 값은 서로 다르고, 상수 꼬리는 cycle=None, cycle 은 최소 주기이며
    cycle.start 는 주기 법칙이 시작되는 가장 이른 실제 스위치입니다.

    Raises:
        NonIncreasingTimesError: 시각이 엄격히 증가하지 않거나 cycle.start 이후에 transient 가 있는 경우
        NonPositivePeriodError: period <= 0
        BadPatternError: 패턴 오프셋이 [0, period) 밖이거나 첫 오프셋이 0 이 아닌 경우
    """
    items = [(Fraction(time), value) for time, value in transient]
    for (previous, _), (current, _) in zip(items, items[1:]):
        if current <= previous:
            raise NonIncreasingTimesError(
                f"switch times must be strictly increasing: {format_rat(previous)} then {format_rat(current)}"
            )
    if cycle is None:
        return StepFunction(init, tuple(_merge_runs(init, items)), None)

    start = Fraction(cycle.start)
    period = Fraction(cycle.period)
    if period <= 0:
        raise NonPositivePeriodError(f"cycle period must be positive, got {format_rat(period)}")
    pattern = [(Fraction(offset), value) for offset, value in cycle.pattern]
    if not pattern or pattern[0][0] != 0:
        raise BadPatternError("the first pattern offset must be 0")
    for (previous, _), (current, _) in zip(pattern, pattern[1:]):
        if current <= previous:
            raise BadPatternError(
                f"pattern offsets must be strictly increasing: +{format_rat(previous)} then +{format_rat(current)}"
            )
    if pattern[-1][0] >= period:
        raise BadPatternError(
            f"pattern offset +{format_rat(pattern[-1][0])} is outside [0, {format_rat(period)})"
        )
    if items and items[-1][0] >= start:
        raise NonIncreasingTimesError(
            f"transient switch at {format_rat(items[-1][0])} does not precede the cycle start {format_rat(start)}"
        )

    ends = [offset for offset, _ in pattern[1:]] + [period]
    segments = [(end - offset, value) for (offset, value), end in zip(pattern, ends)]
    return _canonical_cycle(init, _merge_runs(init, items), start, segments)


def combine(f: StepFunction, g: StepFunction, op: Callable[[Any, Any], W]) -> StepFunction[W]:
    """두 계단 함수의 점별 결합. 꼬리는 두 주기의 최소공배수와 더 늦은 시작점으로 맞춥니다."""
    init = op(f.init, g.init)
    cycles = [cycle for cycle in (f.cycle, g.cycle) if cycle is not None]
    if not cycles:
        times = sorted(set(f.times) | set(g.times))
        return build_steps(init, [(t, op(f.value_at(t), g.value_at(t))) for t in times])

    period = cycles[0].period
    for cycle in cycles[1:]:
        period = lcm_rat(period, cycle.period)
    start = max([cycle.start for cycle in cycles] + list(f.times[-1:]) + list(g.times[-1:]))

    head = sorted(set(f.switches_in(None, start)) | set(g.switches_in(None, start)))
    transient = [(t, op(f.value_at(t), g.value_at(t))) for t in head]

    offsets = {Fraction(0)}
    for function in (f, g):
        offsets.update(t - start for t in function.switches_in(start, start + period))
    pattern = tuple(
        (offset, op(f.value_at(start + offset), g.value_at(start + offset)))
        for offset in sorted(offsets)
    )
    return build_steps(init, transient, Cycle(start, period, pattern))
