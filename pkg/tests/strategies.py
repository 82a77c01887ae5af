"""hypothesis 전략: 분모 ≤ 4 인 유리수, 무작위 신호, 주기점 구성"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from hypothesis import assume
from hypothesis import strategies as st

from sigperiod import BinaryVector, CycleSpec, UPSignal, make_signal, prime_period, valid_tprime_interval

DENOMINATORS = (1, 2, 3, 4)


def rationals(lo: int = -8, hi: int = 8) -> st.SearchStrategy[Fraction]:
    """[lo, hi] 안에서 분모가 4 이하인 유리수"""
    return st.sampled_from(DENOMINATORS).flatmap(
        lambda d: st.integers(lo * d, hi * d).map(lambda n: Fraction(n, d))
    )


def positive_rationals(hi: int = 10) -> st.SearchStrategy[Fraction]:
    return st.builds(
        lambda d, n: Fraction(n, d),
        st.sampled_from(DENOMINATORS),
        st.integers(1, hi),
    )


@st.composite
def bit_vectors(draw, width: int) -> BinaryVector:
    return BinaryVector(tuple(draw(st.lists(st.integers(0, 1), min_size=width, max_size=width))))


@st.composite
def _pattern(draw, width: int, max_segments: int = 5) -> Tuple[Fraction, List[Tuple[Fraction, BinaryVector]]]:
    d = draw(st.sampled_from(DENOMINATORS))
    m = draw(st.integers(1, 10))
    period = Fraction(m, d)
    cut_count = draw(st.integers(0, min(max_segments - 1, m - 1)))
    cuts = sorted(draw(st.sets(st.integers(1, m - 1), min_size=cut_count, max_size=cut_count))) if m > 1 else []
    offsets = [Fraction(0)] + [Fraction(c, d) for c in cuts]
    return period, [(offset, draw(bit_vectors(width))) for offset in offsets]


@dataclass(frozen=True)
class RawSignal:
    """make_signal 에 넘긴 원래 조각들과 그 결과 신호"""

    init: BinaryVector
    transient: List[Tuple[Fraction, BinaryVector]]
    cycle: Optional[CycleSpec]
    x: UPSignal

    def value_at(self, t: Fraction) -> BinaryVector:
        """조각별 정의를 그대로 따르는 참조 평가"""
        cycle = self.cycle
        if cycle is not None and t >= cycle.start:
            offset = (t - cycle.start) % cycle.period
            return [value for start, value in cycle.pattern if start <= offset][-1]
        values = [value for time, value in self.transient if time <= t]
        return values[-1] if values else self.init

    def sample_points(self, periods: int = 3) -> List[Fraction]:
        """모든 경계점과 각 구간 안쪽의 한 점"""
        edges = {time for time, _ in self.transient}
        if self.cycle is not None:
            for k in range(periods):
                base = Fraction(self.cycle.start) + k * Fraction(self.cycle.period)
                edges.update(base + Fraction(offset) for offset, _ in self.cycle.pattern)
        edges = sorted(edges) or [Fraction(0)]
        inner = [(a + b) / 2 for a, b in zip(edges, edges[1:])]
        return sorted(set(edges + inner + [edges[0] - 1, edges[-1] + 1]))


@st.composite
def raw_signals(draw, max_width: int = 2, max_switches: int = 6, width: Optional[int] = None) -> RawSignal:
    """폭 ≤ 2, transient 스위치 ≤ 6, 패턴 구간 ≤ 5 인 무작위 신호와 그 원래 조각들"""
    if width is None:
        width = draw(st.integers(1, max_width))
    init = draw(bit_vectors(width))
    times = sorted(draw(st.sets(rationals(-6, 6), max_size=max_switches)))
    transient = [(time, draw(bit_vectors(width))) for time in times]
    cycle = None
    if draw(st.booleans()):
        after = (times[-1] if times else Fraction(-6)) + draw(positive_rationals(8))
        period, pattern = draw(_pattern(width))
        cycle = CycleSpec(after, period, pattern)
    return RawSignal(init, transient, cycle, make_signal(init, transient, cycle))


def signals(max_width: int = 2, max_switches: int = 6, width: Optional[int] = None) -> st.SearchStrategy[UPSignal]:
    """무작위 정규형 신호"""
    return raw_signals(max_width, max_switches, width).map(lambda raw: raw.x)


@st.composite
def signal_and_value(draw, max_width: int = 2) -> Tuple[UPSignal, BinaryVector]:
    """신호와 그 궤도의 한 점 (가끔 궤도 밖의 값)"""
    x = draw(signals(max_width=max_width))
    orbit = sorted(x.orbit(), key=str)
    if draw(st.integers(0, 9)) == 0:
        return x, draw(bit_vectors(x.width))
    return x, draw(st.sampled_from(orbit))


@dataclass(frozen=True)
class CanonicalCase:
    """T_1^x = (−∞,t0) ∪ ⋃_k [t1+kT, t0+(k+1)T) 인 폭 1 신호"""

    x: UPSignal
    t0: Fraction
    t1: Fraction
    T: Fraction


@st.composite
def canonical_cases(draw, max_period: int = 20) -> CanonicalCase:
    d = draw(st.sampled_from(DENOMINATORS))
    T = Fraction(draw(st.integers(2, max_period * d)), d)
    t0 = draw(rationals(-10, 10))
    gap = Fraction(draw(st.integers(1, int(T * d) - 1)), d)
    t1 = t0 + gap
    one, zero = BinaryVector((1,)), BinaryVector((0,))
    x = make_signal(one, [(t0, zero)], CycleSpec(t1, T, [(0, one), (t0 + T - t1, zero)]))
    return CanonicalCase(x, t0, t1, T)


@dataclass(frozen=True)
class PeriodicCase:
    """초기값 mu 가 (T, t′) 로 주기점이 되도록 만든 신호"""

    x: UPSignal
    mu: BinaryVector
    T: Fraction
    tprime: Fraction


@st.composite
def periodic_cases(draw, max_width: int = 2) -> PeriodicCase:
    """첫 스위치 t0 에서 바로 주기 P 가 시작하고 패턴의 마지막 구간이 초기값인 신호.

    t′ ∈ [t0 − L, t0) (L = 마지막 구간 길이), T = k·P 이면 정의가 성립합니다.
    """
    width = draw(st.integers(1, max_width))
    mu = draw(bit_vectors(width))
    other = BinaryVector(tuple(1 - bit for bit in mu.bits))
    d = draw(st.sampled_from(DENOMINATORS))
    m = draw(st.integers(2, 10))
    period = Fraction(m, d)
    cut_count = draw(st.integers(1, min(4, m - 1)))
    cuts = sorted(draw(st.sets(st.integers(1, m - 1), min_size=cut_count, max_size=cut_count)))
    offsets = [Fraction(0)] + [Fraction(c, d) for c in cuts]
    values = [other] + [draw(bit_vectors(width)) for _ in offsets[1:-1]] + [mu]
    t0 = draw(rationals(-6, 6))
    x = make_signal(mu, [], CycleSpec(t0, period, list(zip(offsets, values))))

    last_length = period - offsets[-1]
    step = Fraction(draw(st.integers(1, int(last_length * d))), d)
    k = draw(st.integers(1, 2))
    return PeriodicCase(x, mu, k * period, t0 - step)


@st.composite
def accepted_cases(draw, initial_only: bool = False) -> PeriodicCase:
    """무작위 신호에서 prime_period 와 허용 t′ 구간으로 고른 (μ, T, t′).

    T 는 소수 주기의 1~3 배, t′ 는 [lo, hi) 를 8 등분한 점 중 하나입니다.
    lo 가 −∞ 이면 hi − T 부터 고릅니다.
    """
    x = draw(signals())
    assume(not x.is_constant())
    mu = x.initial_value if initial_only else draw(st.sampled_from(sorted(x.orbit(), key=str)))
    verdict = prime_period(x, mu)
    assume(verdict.is_prime)
    T = verdict.period * draw(st.integers(1, 3))
    window = valid_tprime_interval(x, mu, T)
    assume(window is not None)
    hi = window.hi
    lo = window.lo if window.lo is not None else hi - T
    tprime = lo + (hi - lo) * Fraction(draw(st.integers(0, 7)), 8)
    return PeriodicCase(x, mu, T, tprime)
