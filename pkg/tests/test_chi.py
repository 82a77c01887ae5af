"""χ-합 표기: 특성함수의 ⊕ 와 repeat 절"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigperiod import (
    BinaryVector,
    MissingRepeatClauseError,
    SigFormatError,
    SigSemanticError,
    SigSyntaxError,
    WidthMismatchError,
    constant_signal,
    make_signal,
    parse_chi_expr,
    serialize_chi,
)

from .conftest import ONE, XSTAR_CHI, ZERO
from .strategies import signals


def test_xstar_expression(xstar):
    assert parse_chi_expr(XSTAR_CHI) == xstar


def test_serialize_xstar(xstar):
    text = serialize_chi(xstar)
    assert text == "chi(-inf,0) ^ chi[1,2) ^ chi[3,5) ^ ... repeat start=0 period=5"
    assert parse_chi_expr(text) == xstar


@pytest.mark.parametrize(
    "text, expected",
    [
        ("chi(-inf,0)", make_signal(ONE, [(0, ZERO)])),
        ("chi[0,1) ^ chi[0,1)", constant_signal(ZERO)),
        ("0", constant_signal(ZERO)),
        ("chi(-inf,inf)", constant_signal(ONE)),
        ("chi[2,inf)", make_signal(ZERO, [(2, ONE)])),
        ("chi[0,1) ^ chi[1,2)", make_signal(ZERO, [(0, ONE), (2, ZERO)])),
        ("chi(-inf,1/2) ^ chi(-inf,3/2)", make_signal(ZERO, [(Fraction(1, 2), ONE), (Fraction(3, 2), ZERO)])),
    ],
)
def test_simple_expressions(text, expected):
    assert parse_chi_expr(text) == expected


def test_open_continuation_needs_repeat():
    with pytest.raises(MissingRepeatClauseError) as info:
        parse_chi_expr("chi[0,1) ^ ...")
    assert (info.value.line, info.value.column) == (1, 12)


def test_continuation_with_repeat():
    x = parse_chi_expr("chi[0,1) ^ ... repeat start=0 period=2")
    assert x.cycle is not None and x.cycle.period == 2
    assert x.eval(10) == ONE and x.eval(11) == ZERO


def test_terms_must_agree_with_the_periodic_extension():
    with pytest.raises(SigSemanticError):
        parse_chi_expr("chi[0,1) ^ chi[5,6) repeat start=0 period=2")
    # 주기 확장과 일치하는 추가 항은 허용된다
    x = parse_chi_expr("chi[0,1) ^ chi[2,3) ^ chi[4,5) repeat start=0 period=2")
    assert x == parse_chi_expr("chi[0,1) ^ ... repeat start=0 period=2")


@pytest.mark.parametrize(
    "text, kind",
    [
        ("chi[1,0)", SigSemanticError),
        ("chi[0,1", SigSyntaxError),
        ("chi[0,1) ^", SigSyntaxError),
        ("chi{0,1}", SigSyntaxError),
        ("chi[0.5,1)", SigSyntaxError),
        ("chi[0,1) repeat start=0 period=0", SigSemanticError),
        ("", SigSyntaxError),
    ],
)
def test_malformed_expressions(text, kind):
    with pytest.raises(kind):
        parse_chi_expr(text)


def test_serialize_rejects_wide_signals():
    with pytest.raises(WidthMismatchError):
        serialize_chi(constant_signal(BinaryVector.from_string("01")))


@pytest.mark.property_based
@settings(max_examples=500, deadline=None)
@given(signals(max_width=1))
def test_round_trip(x):
    assert parse_chi_expr(serialize_chi(x)) == x


@pytest.mark.property_based
@settings(max_examples=2000, deadline=None)
@given(st.text(alphabet="chi()[],-inf0123/^. rpeatsod=", max_size=60))
def test_random_text_never_crashes(text):
    try:
        parse_chi_expr(text)
    except SigFormatError:
        pass
