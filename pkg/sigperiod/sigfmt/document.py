"""
줄 단위 정규 신호 문서 형식 (`signal v1`)

    signal v1
    width 1
    init 1
    at 0 -> 0
    cycle start 3 period 5
    at +0 -> 1
    at +2 -> 0
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..errors import SigPeriodError, SigSemanticError, SigSyntaxError
from ..models import BinaryVector
from ..signal import CycleSpec, UPSignal, make_signal
from ..utils import format_rat, parse_rat

VERSION = "v1"

_TOKEN = re.compile(r"\S+")
_WIDTH = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Word:
    text: str
    column: int


@dataclass
class SigDocument:
    """파싱된 문서. 각 항목은 자신이 나온 줄 번호를 함께 가집니다."""

    version: str = VERSION
    width: Optional[int] = None
    init: Optional[BinaryVector] = None
    transient: List[Tuple[int, Fraction, BinaryVector]] = field(default_factory=list)
    cycle_line: Optional[int] = None
    cycle_start: Optional[Fraction] = None
    cycle_period: Optional[Fraction] = None
    pattern: List[Tuple[int, Fraction, BinaryVector]] = field(default_factory=list)

    def to_signal(self, last_line: int = 1) -> UPSignal:
        """의미 검사 후 정규형 신호로 변환합니다.

        Raises:
            SigSemanticError: 시각 역전, 폭 불일치, 잘못된 패턴
        """
        if self.width is None or self.init is None:
            missing = "width" if self.width is None else "init"
            raise SigSemanticError(f"missing '{missing}' directive", last_line)

        previous: Optional[Fraction] = None
        for line, time, _ in self.transient:
            if previous is not None and time <= previous:
                raise SigSemanticError(
                    f"non-increasing times: {format_rat(time)} does not follow {format_rat(previous)}", line
                )
            previous = time

        cycle = None
        if self.cycle_line is not None:
            line = self.cycle_line
            if self.cycle_period <= 0:
                raise SigSemanticError(f"cycle period must be positive, got {format_rat(self.cycle_period)}", line)
            if previous is not None and previous >= self.cycle_start:
                raise SigSemanticError(
                    f"transient switch at {format_rat(previous)} does not precede the cycle start "
                    f"{format_rat(self.cycle_start)}",
                    line,
                )
            if not self.pattern:
                raise SigSemanticError("cycle block has no pattern lines", line)
            previous_offset: Optional[Fraction] = None
            for pattern_line, offset, _ in self.pattern:
                if previous_offset is None and offset != 0:
                    raise SigSemanticError("bad pattern: the first offset must be +0", pattern_line)
                if previous_offset is not None and offset <= previous_offset:
                    raise SigSemanticError(
                        f"bad pattern: offset +{format_rat(offset)} does not follow +{format_rat(previous_offset)}",
                        pattern_line,
                    )
                if offset >= self.cycle_period:
                    raise SigSemanticError(
                        f"bad pattern: offset +{format_rat(offset)} is outside [0, {format_rat(self.cycle_period)})",
                        pattern_line,
                    )
                previous_offset = offset
            cycle = CycleSpec(
                self.cycle_start,
                self.cycle_period,
                [(offset, value) for _, offset, value in self.pattern],
            )

        try:
            return make_signal(self.init, [(time, value) for _, time, value in self.transient], cycle)
        except SigPeriodError as exc:
            raise SigSemanticError(str(exc), last_line) from exc


class _LineParser:
    """한 줄씩 읽으며 SigDocument 를 채웁니다."""

    def __init__(self) -> None:
        self.document = SigDocument()
        self.seen_header = False
        self.line = 0

    def feed(self, line_number: int, raw: str) -> None:
        self.line = line_number
        words = [Word(m.group(0), m.start() + 1) for m in _TOKEN.finditer(raw.split("#", 1)[0])]
        if not words:
            return
        head = words[0]
        if not self.seen_header:
            if head.text != "signal":
                raise SigSyntaxError("expected header 'signal v1'", line_number, head.column)
            self._expect_count(words, 2, "signal v1")
            if words[1].text != VERSION:
                raise SigSyntaxError(f"unsupported version {words[1].text!r}", line_number, words[1].column)
            self.seen_header = True
            return

        handler = {
            "width": self._width,
            "init": self._init,
            "at": self._at,
            "cycle": self._cycle,
        }.get(head.text)
        if handler is None:
            raise SigSyntaxError(f"unknown directive {head.text!r}", line_number, head.column)
        handler(words)

    def _expect_count(self, words: List[Word], count: int, usage: str) -> None:
        if len(words) < count:
            column = words[-1].column + len(words[-1].text)
            raise SigSyntaxError(f"incomplete line, expected '{usage}'", self.line, column)
        if len(words) > count:
            raise SigSyntaxError(f"unexpected {words[count].text!r}, expected '{usage}'", self.line, words[count].column)

    def _keyword(self, word: Word, keyword: str) -> None:
        if word.text != keyword:
            raise SigSyntaxError(f"expected {keyword!r}, got {word.text!r}", self.line, word.column)

    def _rat(self, word: Word) -> Fraction:
        try:
            return parse_rat(word.text)
        except ValueError as exc:
            raise SigSyntaxError(str(exc), self.line, word.column) from exc

    def _bits(self, word: Word) -> BinaryVector:
        try:
            value = BinaryVector.from_string(word.text)
        except ValueError as exc:
            raise SigSyntaxError(str(exc), self.line, word.column) from exc
        width = self.document.width
        if width is not None and value.width != width:
            raise SigSemanticError(f"bad width: {word.text} has {value.width} bits, expected {width}", self.line)
        return value

    def _width(self, words: List[Word]) -> None:
        self._expect_count(words, 2, "width <n>")
        if self.document.width is not None:
            raise SigSyntaxError("duplicate 'width' directive", self.line, words[0].column)
        if not _WIDTH.fullmatch(words[1].text) or len(words[1].text) > 9 or int(words[1].text) < 1:
            raise SigSyntaxError(f"width must be a positive integer, got {words[1].text!r}", self.line, words[1].column)
        self.document.width = int(words[1].text)

    def _init(self, words: List[Word]) -> None:
        self._expect_count(words, 2, "init <bits>")
        if self.document.width is None:
            raise SigSyntaxError("'init' must follow 'width'", self.line, words[0].column)
        if self.document.init is not None:
            raise SigSyntaxError("duplicate 'init' directive", self.line, words[0].column)
        self.document.init = self._bits(words[1])

    def _at(self, words: List[Word]) -> None:
        self._expect_count(words, 4, "at <time> -> <bits>")
        if self.document.init is None:
            raise SigSyntaxError("'at' must follow 'init'", self.line, words[0].column)
        self._keyword(words[2], "->")
        time_word = words[1]
        in_cycle = self.document.cycle_line is not None
        if time_word.text.startswith("+") != in_cycle:
            if in_cycle:
                message = "pattern lines after 'cycle' must use an offset '+<rat>'"
            else:
                message = "offsets '+<rat>' are only allowed after 'cycle'"
            raise SigSyntaxError(message, self.line, time_word.column)
        time = self._rat(time_word)
        value = self._bits(words[3])
        target = self.document.pattern if in_cycle else self.document.transient
        target.append((self.line, time, value))

    def _cycle(self, words: List[Word]) -> None:
        self._expect_count(words, 5, "cycle start <rat> period <rat>")
        if self.document.init is None:
            raise SigSyntaxError("'cycle' must follow 'init'", self.line, words[0].column)
        if self.document.cycle_line is not None:
            raise SigSyntaxError("duplicate 'cycle' block", self.line, words[0].column)
        self._keyword(words[1], "start")
        self._keyword(words[3], "period")
        self.document.cycle_start = self._rat(words[2])
        self.document.cycle_period = self._rat(words[4])
        self.document.cycle_line = self.line


def decode_input(text: Union[str, bytes]) -> str:
    """bytes 입력은 UTF-8 로 해석합니다."""
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SigSyntaxError("input is not valid UTF-8", 1, 1) from exc
    return text


def parse_document(text: Union[str, bytes]) -> Tuple[SigDocument, int]:
    """문서를 줄 단위로 읽어 SigDocument 와 마지막 줄 번호를 돌려줍니다.

    Raises:
        SigSyntaxError: 행/열 정보를 가진 문법 오류
        SigSemanticError: 폭이 맞지 않는 값
    """
    parser = _LineParser()
    lines = decode_input(text).splitlines()
    for number, raw in enumerate(lines, start=1):
        parser.feed(number, raw)
    if not parser.seen_header:
        raise SigSyntaxError("empty document, expected header 'signal v1'", max(1, len(lines)), 1)
    return parser.document, max(1, len(lines))


def parse(text: Union[str, bytes]) -> UPSignal:
    """정규 신호 문서를 UPSignal 로 읽습니다.

    Args:
        text: 문서 (str 또는 UTF-8 bytes)

    Returns:
        정규형 UPSignal

    Raises:
        SigSyntaxError, SigSemanticError
    """
    document, last_line = parse_document(text)
    return document.to_signal(last_line)


def serialize(x: UPSignal) -> str:
    """정규형 신호를 문서로 씁니다. parse 로 다시 읽으면 같은 신호가 됩니다.

    정규형은 주기 블록을 적용 가능한 가장 이른 시각에서 시작하므로, 입력 문서의
    transient 끝부분이 주기 법칙을 따르면 그 스위치들은 cycle 블록에 흡수됩니다.
    예: `at 0 -> 0`, `at 1 -> 1`, `at 2 -> 0` 뒤에 `cycle start 3 period 5` 가 오는
    문서는 transient 없이 `cycle start 0 period 5` 로 쓰입니다.
    """
    lines = [
        f"signal {VERSION}",
        f"width {x.width}",
        f"init {x.init}",
    ]
    lines.extend(f"at {format_rat(time)} -> {value}" for time, value in x.transient)
    cycle = x.cycle
    if cycle is not None:
        lines.append(f"cycle start {format_rat(cycle.start)} period {format_rat(cycle.period)}")
        lines.extend(f"at +{format_rat(offset)} -> {value}" for offset, value in cycle.pattern)
    return "\n".join(lines) + "\n"
