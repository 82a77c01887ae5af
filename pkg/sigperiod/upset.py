"""
궁극적 주기 시간 집합 - 반열린 유리 구간들의 합집합 (T_μ^x 의 표현)
"""

import operator
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .models import BinaryVector, Bound, Degenerate, NEG_INF, POS_INF
from .signal import RatLike, UPSignal
from .steps import Cycle, StepFunction, build_steps, combine
from .utils import common_denominator, format_bound, format_rat, min_word_period

Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class TailView:
    """∪_{k≥0} (pattern_intervals + start + k·period)"""

    start: Fraction
    period: Fraction
    pattern_intervals: Tuple[Interval, ...]


@dataclass(frozen=True)
class UPSet:
    """궁극적 주기 부분집합 ⊆ ℝ. 내부적으로는 bool 값 계단 함수(지시함수)입니다."""

    steps: StepFunction[bool]

    # --- 생성자 -----------------------------------------------------------

    @classmethod
    def empty(cls) -> "UPSet":
        return cls(StepFunction(False))

    @classmethod
    def full(cls) -> "UPSet":
        return cls(StepFunction(True))

    @classmethod
    def interval(cls, a: RatLike, b: RatLike) -> "UPSet":
        """[a, b), a < b"""
        return cls(build_steps(False, [(Fraction(a), True), (Fraction(b), False)]))

    @classmethod
    def below(cls, r: RatLike) -> "UPSet":
        """(-∞, r)"""
        return cls(build_steps(True, [(Fraction(r), False)]))

    @classmethod
    def at_least(cls, c: RatLike) -> "UPSet":
        """[c, ∞)"""
        return cls(build_steps(False, [(Fraction(c), True)]))

    # --- 구성요소 보기 -----------------------------------------------------

    @property
    def initial_ray(self) -> Optional[Bound]:
        """(-∞, r) 의 r. ℝ 전체면 +∞, 초기 반직선이 없으면 None"""
        if not self.steps.init:
            return None
        first = self.steps.first_switch()
        return POS_INF if first is None else first

    def tail_start(self) -> Optional[Fraction]:
        """주기 꼬리(또는 [c,∞) 꼬리)의 시작점"""
        steps = self.steps
        if steps.cycle is not None:
            return steps.cycle.start
        if steps.transient and steps.final_value():
            return steps.times[-1]
        return None

    def earliest_breakpoint(self) -> Optional[Fraction]:
        return self.steps.first_switch()

    @property
    def transient_intervals(self) -> Tuple[Interval, ...]:
        steps = self.steps
        first = steps.first_switch()
        if first is None:
            return ()
        end = self.tail_start()
        if end is None:
            end = steps.times[-1]
        return tuple(self.intervals(first, end))

    @property
    def tail(self) -> Optional[TailView]:
        steps = self.steps
        cycle = steps.cycle
        if cycle is not None:
            ends = list(cycle.offsets[1:]) + [cycle.period]
            pieces = tuple(
                (offset, end) for (offset, value), end in zip(cycle.pattern, ends) if value
            )
            return TailView(cycle.start, cycle.period, pieces)
        start = self.tail_start()
        if start is None:
            return None
        return TailView(start, Fraction(1), ((Fraction(0), Fraction(1)),))

    def intervals(self, lo: RatLike, hi: RatLike) -> List[Interval]:
        """S ∩ [lo, hi) 의 극대 구간들"""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo >= hi:
            return []
        points = [lo] + [t for t in self.steps.switches_in(lo, hi) if t > lo] + [hi]
        pieces: List[Interval] = []
        for left, right in zip(points, points[1:]):
            if not self.steps.value_at(left):
                continue
            if pieces and pieces[-1][1] == left:
                pieces[-1] = (pieces[-1][0], right)
            else:
                pieces.append((left, right))
        return pieces

    # --- 판정 --------------------------------------------------------------

    def member(self, t: RatLike) -> bool:
        return bool(self.steps.value_at(Fraction(t)))

    __contains__ = member

    def is_empty(self) -> bool:
        return self.steps.is_constant() and not self.steps.init

    def is_full(self) -> bool:
        return self.steps.is_constant() and bool(self.steps.init)

    # --- 집합 연산 ----------------------------------------------------------

    def shift(self, delta: RatLike) -> "UPSet":
        """{t + Δ | t ∈ S}"""
        return UPSet(self.steps.shift(Fraction(delta)))

    def complement(self) -> "UPSet":
        return UPSet(self.steps.map(operator.not_))

    def intersect(self, other: "UPSet") -> "UPSet":
        return UPSet(combine(self.steps, other.steps, operator.and_))

    def union(self, other: "UPSet") -> "UPSet":
        return UPSet(combine(self.steps, other.steps, operator.or_))

    def difference(self, other: "UPSet") -> "UPSet":
        return UPSet(combine(self.steps, other.steps, lambda a, b: a and not b))

    __invert__ = complement
    __and__ = intersect
    __or__ = union
    __sub__ = difference

    def subset(self, other: "UPSet") -> bool:
        return self.difference(other).is_empty()

    def equals(self, other: "UPSet") -> bool:
        return UPSet(combine(self.steps, other.steps, operator.xor)).is_empty()

    def clip_geq(self, c: RatLike) -> "UPSet":
        """S ∩ [c, ∞)"""
        return self.intersect(UPSet.at_least(c))

    def sup_bound(self) -> Bound:
        """sup S (반열린 구간이므로 도달되지 않음). ∅ 이면 -∞, 꼬리가 있으면 +∞"""
        steps = self.steps
        if self.is_empty():
            return NEG_INF
        if steps.cycle is not None or steps.final_value():
            return POS_INF
        return steps.times[-1]

    def minimal_eventual_period(self) -> Union[Fraction, Degenerate]:
        """어떤 M 이후 S ∩ [M,∞) 가 p-주기가 되는 최소 p.

        꼬리 한 주기를 공통 분모 d 의 정수 격자에 올려 길이 p·d 의 순환 이진 워드로
        만든 뒤 최소 회전 주기를 구합니다.
        """
        steps = self.steps
        cycle = steps.cycle
        if cycle is None:
            return Degenerate.FULL if steps.final_value() else Degenerate.EMPTY
        denominator = common_denominator(list(cycle.offsets) + [cycle.period])
        length = int(cycle.period * denominator)
        word = [
            cycle.pattern[bisect_right(cycle.offsets, Fraction(k, denominator)) - 1][1]
            for k in range(length)
        ]
        if all(word):
            return Degenerate.FULL
        if not any(word):
            return Degenerate.EMPTY
        return Fraction(min_word_period(word), denominator)

    def describe(self) -> str:
        """사람이 읽는 표현, 예: (-inf,0) ∪ [1,2) ∪ tail start=3 period=5 {[0,2) [3,4)}"""
        if self.is_empty():
            return "∅"
        if self.is_full():
            return "(-inf,inf)"
        parts: List[str] = []
        ray = self.initial_ray
        if ray is not None:
            parts.append(f"(-inf,{format_bound(ray)})")
        parts.extend(f"[{format_rat(a)},{format_rat(b)})" for a, b in self.transient_intervals)
        tail = self.tail
        if tail is not None:
            if self.steps.cycle is None:
                parts.append(f"[{format_rat(tail.start)},inf)")
            else:
                pieces = " ".join(f"[{format_rat(u)},{format_rat(v)})" for u, v in tail.pattern_intervals)
                parts.append(
                    f"tail start={format_rat(tail.start)} period={format_rat(tail.period)} {{{pieces}}}"
                )
        return " ∪ ".join(parts)


def make_upset(
    initial_ray: Optional[RatLike] = None,
    transient_intervals: Sequence[Tuple[RatLike, RatLike]] = (),
    tail: Optional[TailView] = None,
) -> UPSet:
    """구성요소로부터 정규형 UPSet 을 만듭니다.

    Raises:
        ValueError: a >= b 인 구간, 또는 [0, period] 를 벗어난 꼬리 패턴 구간
    """
    result = UPSet.empty() if initial_ray is None else UPSet.below(initial_ray)
    for a, b in transient_intervals:
        if Fraction(a) >= Fraction(b):
            raise ValueError(f"interval [{format_rat(Fraction(a))},{format_rat(Fraction(b))}) is empty")
        result = result.union(UPSet.interval(a, b))
    if tail is not None:
        result = result.union(_tail_set(tail))
    return result


def _tail_set(tail: TailView) -> UPSet:
    period = Fraction(tail.period)
    pieces = [(Fraction(u), Fraction(v)) for u, v in tail.pattern_intervals]
    for u, v in pieces:
        if not 0 <= u < v <= period:
            raise ValueError(
                f"tail interval [{format_rat(u)},{format_rat(v)}) must satisfy 0 <= u < v <= {format_rat(period)}"
            )
    if not pieces:
        return UPSet.empty()
    events = sorted({Fraction(0)} | {u for u, _ in pieces} | {v for _, v in pieces if v < period})
    pattern = tuple((e, any(u <= e < v for u, v in pieces)) for e in events)
    return UPSet(build_steps(False, (), Cycle(Fraction(tail.start), period, pattern)))


def fiber(x: UPSignal, mu: BinaryVector) -> UPSet:
    """T_μ^x = {t ∈ ℝ | x(t) = μ}

    Raises:
        WidthMismatchError: μ 의 폭이 신호와 다른 경우
    """
    x.require_width(mu)
    return UPSet(x.steps.map(lambda value: value == mu))
