"""core-signal: 평가, 왼쪽 극한, 궤도, 정규형"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigperiod import (
    BadPatternError,
    BinaryVector,
    CycleSpec,
    NonIncreasingTimesError,
    NonPositivePeriodError,
    WidthMismatchError,
    constant_signal,
    fiber,
    make_signal,
)

from .conftest import ONE, ZERO
from .strategies import rationals, raw_signals, signals


@pytest.mark.parametrize(
    "t, expected",
    [(-5, ONE), (0, ZERO), (Fraction(1, 2), ZERO), (1, ONE), (2, ZERO), (4, ONE), (5, ZERO), (6, ONE), (9, ONE), (1003, ONE)],
)
def test_eval_xstar(xstar, t, expected):
    assert xstar.eval(t) == expected
    assert xstar(t) == expected


def test_left_limit_xstar(xstar):
    assert xstar.left_limit(0) == ONE
    assert xstar.left_limit(1) == ZERO
    assert xstar.left_limit(3) == ZERO
    assert xstar.left_limit(5) == ONE
    assert xstar.left_limit(Fraction(7, 2)) == ONE


def test_orbit_and_initial_value(xstar):
    assert xstar.orbit() == {ZERO, ONE}
    assert xstar.initial_value == ONE
    assert xstar.first_switch() == 0
    assert not xstar.is_constant()


def test_cycle_rolls_back_to_earliest_start(xstar):
    # [0,3) 이 이미 주기 법칙을 따르므로 정규형의 cycle 은 0 에서 시작한다
    rolled = make_signal(ONE, [], CycleSpec(0, 5, [(0, ZERO), (1, ONE), (2, ZERO), (3, ONE)]))
    assert rolled == xstar
    assert xstar.cycle.start == 0
    assert xstar.transient == ()


def test_switch_times_and_last_switch(xstar):
    assert xstar.switch_times(0, 10) == [0, 1, 2, 3, 5, 6, 7, 8]
    assert xstar.last_switch_before(5) == 3
    assert xstar.last_switch_before(0) is None
    assert xstar.last_switch_before(Fraction(21, 2)) == 10


def test_constant_signal():
    x = constant_signal(BinaryVector.from_string("01"))
    assert x.is_constant()
    assert x.first_switch() is None
    assert x.orbit() == {BinaryVector.from_string("01")}
    assert x.eval(-100) == x.eval(100)


def test_merged_runs_are_not_switches():
    x = make_signal(ZERO, [(0, ONE), (1, ONE), (2, ZERO)])
    assert x.transient == ((0, ONE), (2, ZERO))


def test_constant_tail_drops_the_cycle():
    x = make_signal(ZERO, [(0, ONE)], CycleSpec(2, 3, [(0, ONE)]))
    assert x.cycle is None
    assert x.transient == ((0, ONE),)


def test_xor_with_itself_is_zero(xstar):
    assert (xstar ^ xstar) == constant_signal(ZERO)


def test_xor_of_characteristic_functions():
    a = make_signal(ZERO, [(0, ONE), (2, ZERO)])
    b = make_signal(ZERO, [(1, ONE), (3, ZERO)])
    assert (a ^ b).transient == ((0, ONE), (1, ZERO), (2, ONE), (3, ZERO))


def test_non_increasing_times_rejected():
    with pytest.raises(NonIncreasingTimesError):
        make_signal(ZERO, [(2, ONE), (1, ZERO)])


def test_transient_after_cycle_start_rejected():
    with pytest.raises(NonIncreasingTimesError):
        make_signal(ZERO, [(4, ONE)], CycleSpec(3, 2, [(0, ZERO), (1, ONE)]))


@pytest.mark.parametrize(
    "pattern",
    [
        [(1, ONE)],
        [(0, ONE), (0, ZERO)],
        [(0, ONE), (2, ZERO)],
        [],
    ],
)
def test_bad_pattern_rejected(pattern):
    with pytest.raises(BadPatternError):
        make_signal(ZERO, [], CycleSpec(0, 2, pattern))


def test_non_positive_period_rejected():
    with pytest.raises(NonPositivePeriodError):
        make_signal(ZERO, [], CycleSpec(0, 0, [(0, ONE)]))


def test_width_mismatch_rejected():
    with pytest.raises(WidthMismatchError):
        make_signal(ZERO, [(0, BinaryVector.from_string("11"))])
    with pytest.raises(WidthMismatchError):
        make_signal(ZERO) ^ constant_signal(BinaryVector.from_string("00"))


@pytest.mark.property_based
@settings(max_examples=300, deadline=None)
@given(signals(), rationals(-10, 30))
def test_left_limit_matches_value_just_before(x, t):
    assert x.left_limit(t) == x.eval(t - Fraction(1, 1000))


@pytest.mark.property_based
@settings(max_examples=300, deadline=None)
@given(signals(), rationals(-10, 30))
def test_value_is_right_continuous(x, t):
    assert x.eval(t) == x.eval(t + Fraction(1, 1000))


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(signals())
def test_tail_repeats_with_cycle_period(x):
    if x.cycle is None:
        return
    for k in range(0, 40):
        t = x.cycle.start + Fraction(k, 4)
        assert x.eval(t) == x.eval(t + x.cycle.period)


@pytest.mark.property_based
@settings(max_examples=500, deadline=None)
@given(raw_signals())
def test_canonical_form_keeps_pointwise_values(raw):
    for t in raw.sample_points():
        assert raw.x.eval(t) == raw.value_at(t), t


@pytest.mark.property_based
@settings(max_examples=500, deadline=None)
@given(raw_signals())
def test_orbit_size_is_bounded(raw):
    pattern = raw.cycle.pattern if raw.cycle is not None else []
    size = len(raw.x.orbit())
    assert size <= 2 ** raw.x.width
    assert size <= 1 + len(raw.transient) + len(pattern)


def _same_width_signals(count):
    return st.integers(1, 2).flatmap(lambda width: st.tuples(*[signals(width=width)] * count))


@pytest.mark.property_based
@settings(max_examples=300, deadline=None)
@given(_same_width_signals(3))
def test_xor_is_associative_and_commutative(triple):
    x, y, z = triple
    assert (x ^ y) ^ z == x ^ (y ^ z)
    assert x ^ y == y ^ x


@pytest.mark.property_based
@settings(max_examples=300, deadline=None)
@given(signals())
def test_xor_with_constants(x):
    assert x ^ constant_signal(BinaryVector.zeros(x.width)) == x
    flipped = x ^ constant_signal(BinaryVector.ones(x.width))
    for mu in x.orbit():
        inverse = BinaryVector(tuple(1 - bit for bit in mu.bits))
        assert fiber(flipped, inverse).equals(fiber(x, mu))


def test_xor_with_one_complements_xstar(xstar):
    flipped = xstar ^ constant_signal(ONE)
    assert fiber(flipped, ONE).equals(fiber(xstar, ZERO))
    assert fiber(flipped, ZERO).equals(fiber(xstar, ONE))
    assert fiber(flipped, ONE).equals(fiber(xstar, ONE).complement())
