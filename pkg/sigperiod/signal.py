"""
연속 시간 이진 신호 - 궁극적 주기 계단 함수 ℝ → B^n
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from .errors import WidthMismatchError
from .models import BinaryVector
from .steps import Cycle, StepFunction, build_steps, combine

RatLike = Union[Fraction, int]
SwitchSpec = Tuple[RatLike, BinaryVector]


@dataclass(frozen=True)
class CycleSpec:
    """make_signal 에 넘기는 반복 블록 (오프셋은 [0, period), 첫 오프셋 0)"""

    start: RatLike
    period: RatLike
    pattern: Sequence[SwitchSpec]


@dataclass(frozen=True)
class UPSignal:
    """궁극적 주기 신호. make_signal 로 만들면 항상 정규형입니다."""

    width: int
    steps: StepFunction[BinaryVector]

    @property
    def init(self) -> BinaryVector:
        return self.steps.init

    @property
    def transient(self) -> Tuple[Tuple[Fraction, BinaryVector], ...]:
        return self.steps.transient

    @property
    def cycle(self) -> Optional[Cycle[BinaryVector]]:
        return self.steps.cycle

    def eval(self, t: RatLike) -> BinaryVector:
        """x(t). 각 스위치에서 오른쪽 연속입니다."""
        return self.steps.value_at(Fraction(t))

    __call__ = eval

    def left_limit(self, t: RatLike) -> BinaryVector:
        """x(t-0): 어떤 ε>0 에 대해 (t-ε, t) 에서 신호가 갖는 값"""
        return self.steps.left_limit(Fraction(t))

    @property
    def initial_value(self) -> BinaryVector:
        """x(-∞+0)"""
        return self.steps.init

    def orbit(self) -> FrozenSet[BinaryVector]:
        """Or(x) = {x(t) | t ∈ ℝ}"""
        return frozenset(self.steps.values())

    def is_constant(self) -> bool:
        return self.steps.is_constant()

    def first_switch(self) -> Optional[Fraction]:
        """x(t) ≠ x(-∞+0) 인 최소 t (상수 신호면 None)"""
        return self.steps.first_switch()

    def last_switch_before(self, u: RatLike) -> Optional[Fraction]:
        return self.steps.last_switch_before(Fraction(u))

    def switch_times(self, lo: Optional[RatLike] = None, hi: Optional[RatLike] = None) -> List[Fraction]:
        return self.steps.switches_in(
            None if lo is None else Fraction(lo),
            None if hi is None else Fraction(hi),
        )

    def require_width(self, value: BinaryVector) -> None:
        if value.width != self.width:
            raise WidthMismatchError(
                f"width mismatch: signal has width {self.width}, value {value} has width {value.width}"
            )

    def xor(self, other: "UPSignal") -> "UPSignal":
        """점별 ⊕"""
        if self.width != other.width:
            raise WidthMismatchError(f"width mismatch: {self.width} vs {other.width}")
        return UPSignal(self.width, combine(self.steps, other.steps, lambda a, b: a ^ b))

    __xor__ = xor


def make_signal(
    init: BinaryVector,
    transient: Sequence[SwitchSpec] = (),
    cycle: Optional[CycleSpec] = None,
) -> UPSignal:
    """정규형 신호를 만듭니다.

    Args:
        init: 초기값 μ = x(-∞+0)
        transient: (시각, 값) 스위치 목록, 시각은 엄격히 증가
        cycle: 선택적인 반복 블록

    Returns:
        같은 점별 의미를 갖는 정규형 UPSignal

    Raises:
        WidthMismatchError, NonIncreasingTimesError, BadPatternError, NonPositivePeriodError
    """
    width = init.width
    values = [value for _, value in transient]
    if cycle is not None:
        values += [value for _, value in cycle.pattern]
    for value in values:
        if value.width != width:
            raise WidthMismatchError(
                f"width mismatch: init has width {width}, value {value} has width {value.width}"
            )
    raw_cycle = None
    if cycle is not None:
        raw_cycle = Cycle(
            Fraction(cycle.start),
            Fraction(cycle.period),
            tuple((Fraction(offset), value) for offset, value in cycle.pattern),
        )
    return UPSignal(width, build_steps(init, transient, raw_cycle))


def constant_signal(value: BinaryVector) -> UPSignal:
    return make_signal(value)
