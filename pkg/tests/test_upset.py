"""upset: 궁극적 주기 시간 집합의 집합 연산과 최소 최종 주기"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigperiod import NEG_INF, POS_INF, BinaryVector, Degenerate, TailView, UPSet, WidthMismatchError, fiber, make_upset

from .conftest import ONE
from .strategies import rationals, signals

SAMPLE_POINTS = [Fraction(k, 12) for k in range(-12 * 8, 12 * 30, 5)]


def _sets():
    return signals(max_width=1).map(lambda x: fiber(x, ONE))


def test_fiber_of_xstar(xstar):
    F = fiber(xstar, ONE)
    assert F.initial_ray == 0
    assert F.intervals(0, 11) == [(1, 2), (3, 5), (6, 7), (8, 10)]
    assert F.describe() == "(-inf,0) ∪ tail start=0 period=5 {[1,2) [3,5)}"
    assert -1 in F and 0 not in F and 4 in F


def test_fiber_width_mismatch(xstar):
    with pytest.raises(WidthMismatchError):
        fiber(xstar, BinaryVector.from_string("10"))


def test_basic_constructors():
    assert UPSet.empty().is_empty()
    assert UPSet.full().is_full()
    assert UPSet.full().initial_ray == POS_INF
    assert UPSet.interval(1, 3).intervals(-10, 10) == [(1, 3)]
    assert UPSet.below(2).initial_ray == 2
    assert UPSet.at_least(4).tail_start() == 4
    assert UPSet.empty().describe() == "∅"
    assert UPSet.full().describe() == "(-inf,inf)"


def test_make_upset_components():
    S = make_upset(initial_ray=0, transient_intervals=[(1, 2)], tail=TailView(3, 5, ((0, 2),)))
    assert S.initial_ray == 0
    assert S.transient_intervals == ((1, 2),)
    assert S.tail == TailView(Fraction(3), Fraction(5), ((Fraction(0), Fraction(2)),))


@pytest.mark.parametrize("bad", [[(2, 1)], [(1, 1)]])
def test_make_upset_rejects_empty_intervals(bad):
    with pytest.raises(ValueError):
        make_upset(transient_intervals=bad)


def test_make_upset_rejects_tail_outside_period():
    with pytest.raises(ValueError):
        make_upset(tail=TailView(0, 2, ((1, 3),)))


def test_sup_bound():
    assert UPSet.empty().sup_bound() == NEG_INF
    assert UPSet.interval(1, 3).sup_bound() == 3
    assert UPSet.below(2).sup_bound() == 2
    assert UPSet.at_least(0).sup_bound() == POS_INF
    assert make_upset(tail=TailView(0, 2, ((0, 1),))).sup_bound() == POS_INF


def test_minimal_eventual_period():
    assert make_upset(tail=TailView(0, 2, ((0, 1),))).minimal_eventual_period() == 2
    # [0,1) ∪ [2,3) 를 4 마다 반복하면 최소 주기는 2
    doubled = make_upset(tail=TailView(0, 4, ((0, 1), (2, 3))))
    assert doubled.minimal_eventual_period() == 2
    assert make_upset(tail=TailView(0, Fraction(3, 2), ((0, Fraction(1, 2)),))).minimal_eventual_period() == Fraction(3, 2)
    assert UPSet.interval(0, 1).minimal_eventual_period() is Degenerate.EMPTY
    assert UPSet.at_least(0).minimal_eventual_period() is Degenerate.FULL


def test_shift_and_difference():
    S = UPSet.interval(0, 2)
    assert S.shift(3).intervals(-5, 10) == [(3, 5)]
    assert (S - UPSet.interval(1, 5)).intervals(-5, 10) == [(0, 1)]
    assert S.clip_geq(1).intervals(-5, 10) == [(1, 2)]


def test_subset_and_equals():
    tail = TailView(0, 2, ((0, 1),))
    periodic = make_upset(tail=tail)
    assert periodic.subset(UPSet.at_least(0))
    assert not UPSet.at_least(0).subset(periodic)
    assert periodic.equals(make_upset(tail=TailView(2, 2, ((0, 1),))).union(UPSet.interval(0, 1)))


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(_sets(), _sets())
def test_set_operations_pointwise(S, U):
    union, inter, diff, comp = S | U, S & U, S - U, ~S
    for t in SAMPLE_POINTS:
        assert (t in union) == (t in S or t in U)
        assert (t in inter) == (t in S and t in U)
        assert (t in diff) == (t in S and t not in U)
        assert (t in comp) == (t not in S)


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(_sets(), rationals(-5, 5))
def test_shift_pointwise(S, delta):
    shifted = S.shift(delta)
    for t in SAMPLE_POINTS:
        assert (t + delta in shifted) == (t in S)


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(_sets())
def test_subset_agrees_with_equals(S):
    assert S.subset(S | UPSet.interval(-1, 1))
    assert S.equals(S & S)
    assert (S - S).is_empty()


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(_sets())
def test_minimal_eventual_period_is_a_period(S):
    p = S.minimal_eventual_period()
    if isinstance(p, Degenerate):
        return
    start = S.tail_start()
    for k in range(0, 60):
        t = start + Fraction(k, 12)
        assert (t in S) == (t + p in S)
    # 더 작은 격자 주기는 꼬리를 보존하지 않는다
    for q in range(1, int(p * 12)):
        smaller = Fraction(q, 12)
        if all((start + Fraction(k, 12) in S) == (start + Fraction(k, 12) + smaller in S) for k in range(0, int(p * 24))):
            pytest.fail(f"{smaller} is a smaller eventual period than {p}")


@pytest.mark.property_based
@settings(max_examples=200, deadline=None)
@given(_sets(), st.integers(0, 40), st.integers(1, 40))
def test_intervals_are_maximal_and_inside(S, lo_index, width):
    lo = SAMPLE_POINTS[lo_index]
    hi = lo + Fraction(width, 4)
    pieces = S.intervals(lo, hi)
    for (a, b), (c, _) in zip(pieces, pieces[1:]):
        assert b < c
    for a, b in pieces:
        assert lo <= a < b <= hi
        assert a in S
        assert S.member(b - Fraction(1, 1000))


@pytest.mark.property_based
@settings(max_examples=300, deadline=None)
@given(signals())
def test_fibers_partition_the_line(x):
    fibers = [fiber(x, mu) for mu in sorted(x.orbit(), key=str)]
    cover = fibers[0]
    for F in fibers[1:]:
        cover = cover.union(F)
    assert cover.is_full()
    for i, F in enumerate(fibers):
        for G in fibers[i + 1:]:
            assert F.intersect(G).is_empty()
    for t in SAMPLE_POINTS:
        assert sum(F.member(t) for F in fibers) == 1
