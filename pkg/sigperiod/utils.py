"""
SigPeriod Helper 함수들
"""

import math
import re
import sys
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .models import Bound, NEG_INF, POS_INF

_RAT_PATTERN = re.compile(r"^([+-]?)([0-9]+)(?:/([0-9]+))?$")


def parse_rat(text: str) -> Fraction:
    """'p/q' 또는 정수 'p' 형식의 유리수를 읽습니다. 소수 표기는 허용하지 않습니다.

    Args:
        text: 유리수 문자열 (예: "-7/2", "5", "+3")

    Returns:
        기약분수 형태의 Fraction

    Raises:
        ValueError: 형식이 잘못되었거나 분모가 0인 경우
    """
    match = _RAT_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"invalid rational {text!r}: expected p/q or an integer")
    sign, numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"invalid rational {text!r}: zero denominator")
    value = Fraction(int(numerator), int(denominator or 1))
    return -value if sign == "-" else value


def format_rat(value: Union[Fraction, int]) -> str:
    """정수면 'p', 아니면 'p/q' 로 출력합니다."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_bound(value: Optional[Bound]) -> str:
    """±∞ 를 포함한 경계값 출력"""
    if value is None:
        return "none"
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "inf"
    return format_rat(Fraction(value))


def common_denominator(values: Iterable[Fraction]) -> int:
    """모든 값의 분모의 최소공배수"""
    denominator = 1
    for value in values:
        denominator = math.lcm(denominator, Fraction(value).denominator)
    return denominator


def lcm_rat(a: Fraction, b: Fraction) -> Fraction:
    """양의 유리수 두 개의 최소공배수 (둘 다의 정수배가 되는 최소 양수)"""
    denominator = math.lcm(a.denominator, b.denominator)
    return Fraction(math.lcm(int(a * denominator), int(b * denominator)), denominator)


def min_word_period(word: Sequence) -> int:
    """순환 워드의 최소 회전 주기를 prefix function 으로 O(n) 에 구합니다.

    결과 q 는 항상 len(word) 의 약수이며 word[i] == word[(i + q) % n] 를 만족합니다.
    """
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no period")
    prefix = [0] * n
    for i in range(1, n):
        k = prefix[i - 1]
        while k > 0 and word[i] != word[k]:
            k = prefix[k - 1]
        if word[i] == word[k]:
            k += 1
        prefix[i] = k
    candidate = n - prefix[-1]
    return candidate if n % candidate == 0 else n


def log_progress(message: str, enabled: bool = True) -> None:
    """진행 상황 한 줄 출력 (stdout 은 결과 전용이므로 stderr 로 보냄)"""
    if enabled:
        print(message, file=sys.stderr)
