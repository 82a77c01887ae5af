"""
SigPeriod 예외 계층
"""

from typing import Optional


class SigPeriodError(Exception):
    """라이브러리 전체의 루트 예외"""


class WidthMismatchError(SigPeriodError, ValueError):
    """비트 폭이 서로 다른 값/신호를 함께 사용한 경우"""


class NonIncreasingTimesError(SigPeriodError, ValueError):
    """스위치 시각이 엄격하게 증가하지 않는 경우"""


class BadPatternError(SigPeriodError, ValueError):
    """cycle 패턴 오프셋이 [0, period) 범위를 벗어나거나 첫 오프셋이 0이 아닌 경우"""


class NonPositivePeriodError(SigPeriodError, ValueError):
    """주기 T 또는 cycle period 가 0 이하인 경우"""


class NotInOrbitError(SigPeriodError, ValueError):
    """μ 가 신호의 궤도(orbit)에 속하지 않는 경우"""


class ConstantSignalError(SigPeriodError, ValueError):
    """상수 신호에 대해 t0/t1 을 요구한 경우"""


class PreconditionViolatedError(SigPeriodError, ValueError):
    """연산의 사전조건이 성립하지 않는 경우"""


class EmptyWordError(SigPeriodError, ValueError):
    """빈 워드에 대해 주기를 요구한 경우"""


class SigFormatError(SigPeriodError):
    """신호 문서 파싱 오류 (행/열 정보 포함)"""

    def __init__(self, message: str, line: int = 1, column: Optional[int] = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        if column is None:
            text = f"line {line}: {message}"
        else:
            text = f"line {line}, column {column}: {message}"
        super().__init__(text)


class SigSyntaxError(SigFormatError):
    """문법 오류"""


class SigSemanticError(SigFormatError):
    """문법은 맞지만 의미가 잘못된 문서 (시각 역전, 폭 불일치, 잘못된 패턴)"""


class MissingRepeatClauseError(SigSyntaxError):
    """χ 식이 끝없이 이어지는데(`...`) repeat 절이 없는 경우"""
