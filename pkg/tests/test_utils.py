"""유리수 입출력과 워드 주기 도우미"""

from fractions import Fraction

import pytest

from sigperiod.utils import common_denominator, format_bound, format_rat, lcm_rat, min_word_period, parse_rat


@pytest.mark.parametrize(
    "text, expected",
    [("5", Fraction(5)), ("-7/2", Fraction(-7, 2)), ("+3", Fraction(3)), ("4/6", Fraction(2, 3)), (" 1/3 ", Fraction(1, 3))],
)
def test_parse_rat(text, expected):
    assert parse_rat(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "a", "1/-2", "1e3", "١", "2/٣", "５"])
def test_parse_rat_rejects(text):
    with pytest.raises(ValueError):
        parse_rat(text)


def test_format():
    assert format_rat(Fraction(10, 2)) == "5"
    assert format_rat(Fraction(-1, 3)) == "-1/3"
    assert format_bound(float("inf")) == "inf"
    assert format_bound(float("-inf")) == "-inf"
    assert format_bound(None) == "none"


def test_rational_lcm():
    assert lcm_rat(Fraction(3, 2), Fraction(2)) == 6
    assert lcm_rat(Fraction(1, 2), Fraction(1, 3)) == 1
    assert common_denominator([Fraction(1, 4), Fraction(5, 6)]) == 12


def test_min_word_period():
    assert min_word_period("abab") == 2
    assert min_word_period("aab") == 3
    assert min_word_period("aaaa") == 1
    with pytest.raises(ValueError):
        min_word_period([])
