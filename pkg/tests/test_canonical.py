"""정규 fiber 형태: 소수 주기 T 와 허용 t′ = [t1−T, t0) 가 정확히 결정된다"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigperiod import (
    PreconditionViolatedError,
    TPrimeWindow,
    canonical_union,
    check_periodic_point,
    check_theorem75b,
    detect_canonical_fiber,
    fiber,
    parse,
    prime_period,
    valid_tprime_interval,
)

from .conftest import ONE
from .strategies import canonical_cases


def test_canonical_union_shape():
    S = canonical_union(0, 3, 5)
    assert S.initial_ray == 0
    assert S.intervals(0, 16) == [(3, 5), (8, 10), (13, 15)]


def test_canonical_union_degenerates_to_everything():
    assert canonical_union(2, 2, 3).is_full()


@pytest.mark.parametrize("t0, t1, T", [(0, -1, 5), (0, 5, 5), (0, 7, 5)])
def test_canonical_union_rejects_bad_triples(t0, t1, T):
    with pytest.raises(PreconditionViolatedError):
        canonical_union(t0, t1, T)


def test_xstar_fiber_is_not_canonical(xstar):
    assert detect_canonical_fiber(xstar, ONE) is None
    with pytest.raises(PreconditionViolatedError):
        check_theorem75b(xstar, ONE, 5, -1)


def test_detect_simple_canonical_fiber():
    x = parse("signal v1\nwidth 1\ninit 1\nat 0 -> 0\ncycle start 2 period 5\nat +0 -> 1\nat +3 -> 0\n")
    assert detect_canonical_fiber(x, ONE) == (0, 2, 5)
    assert check_theorem75b(x, ONE, 5, -3)
    assert check_theorem75b(x, ONE, 10, -8)
    assert check_theorem75b(x, ONE, 4, -1)


@pytest.mark.property_based
@settings(max_examples=500, deadline=None)
@given(canonical_cases())
def test_canonical_window_is_exact(case):
    assert detect_canonical_fiber(case.x, ONE) == (case.t0, case.t1, case.T)
    assert fiber(case.x, ONE).equals(canonical_union(case.t0, case.t1, case.T))
    assert valid_tprime_interval(case.x, ONE, case.T) == TPrimeWindow(case.t1 - case.T, case.t0)
    verdict = prime_period(case.x, ONE)
    assert verdict.period == case.T
    assert verdict.window == TPrimeWindow(case.t1 - case.T, case.t0)


@pytest.mark.property_based
@settings(max_examples=500, deadline=None)
@given(canonical_cases(), st.integers(1, 4), st.integers(0, 16))
def test_smaller_periods_are_rejected(case, denominator, numerator_index):
    T_prime = case.T * Fraction(numerator_index % (4 * denominator) + 1, 4 * denominator + 1)
    assert T_prime < case.T
    assert valid_tprime_interval(case.x, ONE, T_prime) is None
    assert not check_periodic_point(case.x, ONE, T_prime, case.t0 - Fraction(1, 4))


@pytest.mark.property_based
@settings(max_examples=500, deadline=None)
@given(canonical_cases(), st.integers(1, 3), st.integers(0, 11), st.integers(-4, 4))
def test_accepted_pairs_satisfy_the_bounds(case, k, fraction_index, jitter):
    T_prime = k * case.T
    # 배수 T′ 에서도 허용 t′ 는 [t1−T, t0) 이고, 이는 [t1−T′, t0) 에 포함된다
    low, high = case.t1 - case.T, case.t0
    t_second = low + (high - low) * Fraction(fraction_index, 12) + Fraction(jitter, 8)
    assert check_theorem75b(case.x, ONE, T_prime, t_second)
    assert check_periodic_point(case.x, ONE, T_prime, t_second) == (low <= t_second < high)
