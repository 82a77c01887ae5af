"""
χ-합 표기 - 폭 1 신호를 특성함수들의 ⊕ 로 적는 형식

    chi(-inf,0) ^ chi[1,2) ^ chi[3,5) ^ chi[6,7) ^ ... repeat start=3 period=5
"""

from collections import Counter
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from ..errors import (
    MissingRepeatClauseError,
    SigFormatError,
    SigPeriodError,
    SigSemanticError,
    SigSyntaxError,
    WidthMismatchError,
)
from ..models import BinaryVector
from ..signal import CycleSpec, UPSignal, make_signal
from ..upset import fiber
from ..utils import format_rat, parse_rat
from .document import decode_input

ZERO = BinaryVector((0,))
ONE = BinaryVector((1,))

CHI_GRAMMAR = r"""
    start: expr repeat?

    expr: term ("^" term)* continuation?
        | "0"                                -> zero

    continuation: "^" ELLIPSIS

    term: "chi" "(" "-inf" "," RAT ")"       -> ray_below
        | "chi" "(" "-inf" "," "inf" ")"     -> everything
        | "chi" "[" RAT "," RAT ")"          -> interval
        | "chi" "[" RAT "," "inf" ")"        -> ray_above

    repeat: "repeat" "start" "=" RAT "period" "=" RAT

    ELLIPSIS: "..."
    RAT: /[+-]?[0-9]+(\/[0-9]+)?/

    %import common.WS
    %ignore WS
"""

_parser = Lark(CHI_GRAMMAR, parser="lalr")

# (초기 반직선 여부, 토글 시각 목록)
Toggles = Tuple[int, List[Fraction]]


def _rat(token: Token) -> Fraction:
    try:
        return parse_rat(str(token))
    except ValueError as exc:
        raise SigSyntaxError(str(exc), token.line, token.column) from exc


@v_args(inline=True)
class ChiTransformer(Transformer):
    """파스 트리를 토글 목록과 repeat 절로 바꿉니다."""

    def ray_below(self, end: Token) -> Toggles:
        return 1, [_rat(end)]

    def everything(self) -> Toggles:
        return 1, []

    def ray_above(self, begin: Token) -> Toggles:
        return 0, [_rat(begin)]

    def interval(self, begin: Token, end: Token) -> Toggles:
        a, b = _rat(begin), _rat(end)
        if a >= b:
            raise SigSemanticError(
                f"empty interval chi[{format_rat(a)},{format_rat(b)})", begin.line, begin.column
            )
        return 0, [a, b]

    def continuation(self, ellipsis: Token) -> Token:
        return ellipsis

    def zero(self) -> dict:
        return {"terms": [], "ellipsis": None}

    def expr(self, *items) -> dict:
        ellipsis = items[-1] if items and isinstance(items[-1], Token) else None
        terms = [item for item in items if not isinstance(item, Token)]
        return {"terms": terms, "ellipsis": ellipsis}

    def repeat(self, start: Token, period: Token) -> dict:
        return {"start": _rat(start), "period": _rat(period), "token": start}

    def start(self, expr: dict, repeat: Optional[dict] = None) -> dict:
        return {**expr, "repeat": repeat}


def _xor_signal(terms: List[Toggles]) -> UPSignal:
    """유한 개 특성함수의 ⊕ (홀수 번 토글된 시각만 스위치)"""
    init = sum(parity for parity, _ in terms) % 2
    counts = Counter(time for _, times in terms for time in times)
    value = init
    transient = []
    for time in sorted(t for t, n in counts.items() if n % 2):
        value ^= 1
        transient.append((time, ONE if value else ZERO))
    return make_signal(ONE if init else ZERO, transient)


def _with_tail(y: UPSignal, start: Fraction, period: Fraction, token: Token) -> UPSignal:
    """y 의 [start, start+period) 부분을 반복 꼬리로 삼고, 그 뒤에 적힌 항이 주기 확장과 맞는지 확인합니다."""
    if period <= 0:
        raise SigSemanticError(f"repeat period must be positive, got {format_rat(period)}", token.line, token.column)
    head = [(time, value) for time, value in y.transient if time < start]
    pattern = [(Fraction(0), y.eval(start))]
    pattern += [(time - start, y.eval(time)) for time in y.switch_times(start, start + period) if time > start]
    x = make_signal(y.init, head, CycleSpec(start, period, pattern))

    # 한 주기 뒤에 적힌 항은 [limit, end) 에서 주기 확장과 같아야 한다
    limit = start + period
    end = y.steps.times[-1] if y.steps.times else start
    if end <= limit:
        return x
    samples = {limit} | {t for t in y.steps.times if limit <= t < end} | set(x.switch_times(limit, end))
    for t in sorted(samples):
        if x.eval(t) != y.eval(t):
            raise SigSemanticError(
                f"terms at {format_rat(t)} disagree with the repeat start={format_rat(start)} "
                f"period={format_rat(period)}",
                token.line,
                token.column,
            )
    return x


def parse_chi_expr(text: Union[str, bytes]) -> UPSignal:
    """χ-합 식을 폭 1 UPSignal 로 읽습니다.

    Raises:
        SigSyntaxError: 문법 오류 (행/열 포함)
        MissingRepeatClauseError: `^ ...` 가 있는데 repeat 절이 없는 경우
        SigSemanticError: 빈 구간, 주기 확장과 맞지 않는 항
    """
    source = decode_input(text)
    try:
        tree = _parser.parse(source)
    except UnexpectedEOF as exc:
        raise SigSyntaxError("unexpected end of expression", max(1, source.count("\n") + 1), None) from exc
    except UnexpectedInput as exc:
        line = exc.line if isinstance(exc.line, int) and exc.line > 0 else 1
        column = exc.column if isinstance(exc.column, int) and exc.column > 0 else None
        summary = (str(exc).strip().splitlines() or ["invalid expression"])[0]
        raise SigSyntaxError(f"unexpected input: {summary}", line, column) from exc
    try:
        parsed = ChiTransformer().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, SigFormatError):
            raise exc.orig_exc from None
        raise

    repeat = parsed["repeat"]
    ellipsis = parsed["ellipsis"]
    if ellipsis is not None and repeat is None:
        raise MissingRepeatClauseError(
            "'...' continues the sum forever; declare the tail with 'repeat start=<s> period=<p>'",
            ellipsis.line,
            ellipsis.column,
        )
    try:
        y = _xor_signal(parsed["terms"])
        if repeat is None:
            return y
        return _with_tail(y, repeat["start"], repeat["period"], repeat["token"])
    except SigFormatError:
        raise
    except SigPeriodError as exc:
        raise SigSemanticError(str(exc), 1, None) from exc


def serialize_chi(x: UPSignal) -> str:
    """폭 1 신호를 χ-합으로 씁니다 (transient 와 꼬리 한 주기, 필요하면 repeat 절).

    Raises:
        WidthMismatchError: 폭이 1 이 아닌 경우
    """
    if x.width != 1:
        raise WidthMismatchError(f"chi expressions describe width-1 signals, got width {x.width}")
    ones = fiber(x, ONE)
    if ones.is_full():
        return "chi(-inf,inf)"
    if ones.is_empty():
        return "0"

    terms: List[str] = []
    ray = ones.initial_ray
    if ray is not None:
        terms.append(f"chi(-inf,{format_rat(ray)})")
    first = x.first_switch()
    cycle = x.cycle
    if cycle is None:
        last = x.steps.times[-1]
        terms.extend(f"chi[{format_rat(a)},{format_rat(b)})" for a, b in ones.intervals(first, last))
        if x.steps.final_value() == ONE:
            terms.append(f"chi[{format_rat(last)},inf)")
        return " ^ ".join(terms)

    end = cycle.start + cycle.period
    terms.extend(f"chi[{format_rat(a)},{format_rat(b)})" for a, b in ones.intervals(first, end))
    return (
        " ^ ".join(terms + ["..."])
        + f" repeat start={format_rat(cycle.start)} period={format_rat(cycle.period)}"
    )
