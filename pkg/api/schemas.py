"""Pydantic schemas for the SigPeriod FastAPI service."""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from sigperiod import BinaryVector, UPSignal, parse, parse_chi_expr
from sigperiod.utils import format_rat, parse_rat


def _canonical_rat(value: Any) -> str:
    """'4/2' 같은 입력을 정규 표기 '2' 로 바꿉니다."""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return format_rat(parse_rat(str(value)))


def _positive_rat(value: Any) -> str:
    text = _canonical_rat(value)
    if parse_rat(text) <= 0:
        raise ValueError(f"T must be positive, got {text}")
    return text


class SignalPayload(BaseModel):
    """요청 본문에 실리는 신호 문서."""

    document: str = Field(..., description="signal v1 문서 또는 χ-합 표현식")
    format: Literal["sig", "chi"] = Field("sig", description="문서 형식")

    def to_signal(self) -> UPSignal:
        """문서를 파싱합니다 (SigFormatError 는 호출자가 처리)."""
        if self.format == "chi":
            return parse_chi_expr(self.document)
        return parse(self.document)


class MuPayload(SignalPayload):
    """궤도의 한 점 μ 를 함께 받는 요청."""

    mu: str = Field(..., description="비트 문자열, 예: '1', '01'")

    @field_validator("mu", mode="before")
    @classmethod
    def _check_bits(cls, value: Any) -> str:
        return str(BinaryVector.from_string(str(value)))

    @property
    def mu_vector(self) -> BinaryVector:
        return BinaryVector.from_string(self.mu)


class EvalRequest(SignalPayload):
    """POST /api/eval 요청."""

    t: str = Field(..., description="평가 시각 (p/q)")

    @field_validator("t", mode="before")
    @classmethod
    def _normalize_t(cls, value: Any) -> str:
        return _canonical_rat(value)


class EvalResponse(BaseModel):
    """x(t) 와 x(t-0)."""

    t: str
    value: str
    left_limit: str


class FiberResponse(BaseModel):
    """T_μ^x 요약."""

    mu: str
    fiber: str
    empty: bool
    sup: str
    intervals: List[List[str]] = Field(default_factory=list, description="관측 창 안의 최대 구간들")


class FiberRequest(MuPayload):
    """POST /api/fiber 요청."""

    window_from: Optional[str] = Field(None, description="intervals 를 잘라 볼 창의 시작")
    window_to: Optional[str] = Field(None, description="intervals 를 잘라 볼 창의 끝")

    @field_validator("window_from", "window_to", mode="before")
    @classmethod
    def _normalize_window(cls, value: Any) -> Optional[str]:
        return None if value is None else _canonical_rat(value)


class CheckRequest(MuPayload):
    """POST /api/check 요청."""

    T: str = Field(..., description="주기 후보 (양의 유리수)")
    tprime: str = Field(..., description="t′ (유리수)")
    oracle: bool = Field(False, description="브루트포스 오라클 결과도 함께 계산")

    @field_validator("T", mode="before")
    @classmethod
    def _positive_period(cls, value: Any) -> str:
        return _positive_rat(value)

    @field_validator("tprime", mode="before")
    @classmethod
    def _normalize_tprime(cls, value: Any) -> str:
        return _canonical_rat(value)


class CheckResponse(BaseModel):
    """주기점 판정 결과."""

    accepted: bool
    oracle_accepted: Optional[bool] = None


class PrimeRequest(MuPayload):
    """POST /api/prime 요청."""

    oracle: bool = Field(False, description="브루트포스 오라클 결과도 함께 계산")


class PrimeResponse(BaseModel):
    """소수 주기 분석 결과."""

    verdict: str
    T: Optional[str] = None
    tprime_lo: Optional[str] = None
    tprime_hi: Optional[str] = None
    note: str = ""
    oracle_T: Optional[str] = None
    oracle_note: Optional[str] = None


class Verify76Request(SignalPayload):
    """POST /api/verify76 요청."""

    T: str
    tprime: str

    @field_validator("T", mode="before")
    @classmethod
    def _positive_period(cls, value: Any) -> str:
        return _positive_rat(value)

    @field_validator("tprime", mode="before")
    @classmethod
    def _normalize_tprime(cls, value: Any) -> str:
        return _canonical_rat(value)


class Verify76Response(BaseModel):
    """t0, t1 과 두 결론의 판정."""

    t0: str
    t1: str
    bound_ok: bool
    inclusion_ok: bool


class AnalyzeRequest(SignalPayload):
    """POST /api/analyze 요청."""

    horizon: Optional[int] = Field(None, ge=1, description="오라클이 펼칠 꼬리 주기 수")


class AnalyzeResponse(BaseModel):
    """전체 분석 결과."""

    status: str = Field("completed", description="분석 상태")
    orbit: List[str]
    fibers: Dict[str, str]
    points: List[Dict[str, Any]]
    canonical_fiber: Optional[Dict[str, str]] = None
    theorem76: Optional[Dict[str, Any]] = None
    oracle_agrees: bool
    report_markdown: str

