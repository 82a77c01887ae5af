"""
SigPeriod 데이터 모델 정의
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from typing_extensions import TypedDict

from .errors import WidthMismatchError

# 모든 시각/주기/이동량은 정확한 유리수
Rat = Fraction

NEG_INF = float("-inf")
POS_INF = float("inf")

# sup_bound 처럼 ±∞ 가 나올 수 있는 경계값
Bound = Union[Fraction, float]


@dataclass(frozen=True)
class BinaryVector:
    """B^n 의 한 점 (신호의 어느 시각에서의 값)"""

    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) < 1:
            raise WidthMismatchError("a binary vector needs at least one bit")
        if any(bit not in (0, 1) for bit in self.bits):
            raise ValueError(f"bits must be 0 or 1, got {self.bits!r}")

    @classmethod
    def from_string(cls, text: str) -> "BinaryVector":
        """'0110' 같은 비트 문자열을 읽습니다."""
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"invalid bit string {text!r}: use characters 0 and 1 only")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def zeros(cls, width: int) -> "BinaryVector":
        return cls((0,) * width)

    @classmethod
    def ones(cls, width: int) -> "BinaryVector":
        return cls((1,) * width)

    @property
    def width(self) -> int:
        return len(self.bits)

    def _require_same_width(self, other: "BinaryVector") -> None:
        if self.width != other.width:
            raise WidthMismatchError(
                f"width mismatch: {self.width} vs {other.width}"
            )

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        self._require_same_width(other)
        return BinaryVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __and__(self, other: "BinaryVector") -> "BinaryVector":
        self._require_same_width(other)
        return BinaryVector(tuple(a & b for a, b in zip(self.bits, other.bits)))

    def __invert__(self) -> "BinaryVector":
        return BinaryVector(tuple(1 - bit for bit in self.bits))

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)


class VerdictKind(str, Enum):
    """소수 주기(prime period) 분석 결과 종류"""
    NOT_IN_ORBIT = "not_in_orbit"
    NOT_PERIODIC = "not_periodic"
    NO_PRIME = "no_prime"
    PRIME = "prime"


class Degenerate(str, Enum):
    """minimal_eventual_period 의 퇴화 결과"""
    FULL = "degenerate_full"
    EMPTY = "degenerate_empty"


@dataclass(frozen=True)
class TPrimeWindow:
    """허용되는 t′ 의 반열린 구간 [lo, hi); None 은 무한대"""

    lo: Optional[Fraction]
    hi: Optional[Fraction]

    def contains(self, t: Fraction) -> bool:
        if self.lo is not None and t < self.lo:
            return False
        if self.hi is not None and t >= self.hi:
            return False
        return True

    @property
    def is_everything(self) -> bool:
        return self.lo is None and self.hi is None


@dataclass(frozen=True)
class PeriodicityVerdict:
    """prime_period 결과"""

    kind: VerdictKind
    period: Optional[Fraction] = None
    window: Optional[TPrimeWindow] = None
    note: str = ""

    @property
    def is_prime(self) -> bool:
        return self.kind is VerdictKind.PRIME


@dataclass(frozen=True)
class Theorem76Report:
    """t0, t1 과 두 결론(경계, 정규 합집합 포함)의 판정 결과"""

    t0: Fraction
    t1: Fraction
    bound_ok: bool
    inclusion_ok: bool


@dataclass(frozen=True)
class OraclePrimeResult:
    """oracle_prime_period 의 상세 결과 (주기가 없으면 note 에 이유)"""

    period: Optional[Fraction]
    note: str = ""

    @property
    def is_degenerate(self) -> bool:
        return self.note.startswith("degenerate")


class PointReport(TypedDict, total=False):
    """궤도의 한 점에 대한 분석 결과"""
    mu: str                       # 비트 문자열
    fiber: str                    # T_μ^x 의 사람이 읽는 표현
    verdict: str                  # VerdictKind 값
    period: Optional[str]         # 소수 주기 (p/q)
    tprime_lo: Optional[str]
    tprime_hi: Optional[str]
    oracle_period: Optional[str]  # 오라클이 찾은 주기
    oracle_note: str
    oracle_agrees: bool


class AnalysisState(TypedDict, total=False):
    """LangGraph State - 노드 간 데이터 전달"""
    signal: Any                          # UPSignal
    verbose: bool
    oracle_config: Any                   # OracleConfig
    orbit: List[str]
    fibers: Dict[str, str]
    points: List[PointReport]
    canonical_fiber: Optional[Dict[str, str]]
    theorem76: Optional[Dict[str, Any]]
    oracle_periods: Dict[str, Optional[str]]
    oracle_notes: Dict[str, str]
    report_markdown: str
