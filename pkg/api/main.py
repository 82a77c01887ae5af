"""FastAPI application exposing sigperiod analyses as HTTP API."""

from __future__ import annotations

from typing import Any, Callable, Dict, TypeVar

from fastapi import FastAPI, HTTPException
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse

from sigperiod import (
    OracleConfig,
    SigFormatError,
    SigPeriodError,
    UPSignal,
    __version__,
    check_periodic_point,
    check_theorem76,
    fiber,
    oracle_check,
    oracle_prime_scan,
    prime_period,
    run_signal_analysis,
)
from sigperiod.utils import format_bound, format_rat, parse_rat

from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    CheckRequest,
    CheckResponse,
    EvalRequest,
    EvalResponse,
    FiberRequest,
    FiberResponse,
    PrimeRequest,
    PrimeResponse,
    SignalPayload,
    Verify76Request,
    Verify76Response,
)

R = TypeVar("R")

app = FastAPI(
    title="SigPeriod API",
    description="궁극적 주기 이진 신호의 주기점 분석을 FastAPI로 제공합니다.",
    version=__version__,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _load_signal(payload: SignalPayload) -> UPSignal:
    """요청 문서를 파싱합니다. 형식 오류는 422 로 돌려줍니다."""
    try:
        return payload.to_signal()
    except SigFormatError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _run_domain(fn: Callable[..., R], *args: Any) -> R:
    """도메인 오류(SigPeriodError)를 400 으로 바꿉니다."""
    try:
        return fn(*args)
    except SigFormatError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except SigPeriodError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/", response_class=HTMLResponse, tags=["Root"])
async def landing_page() -> str:
    """간단한 인덱스 페이지."""
    return """
    <html>
        <head><title>SigPeriod API</title></head>
        <body>
            <h1>SigPeriod</h1>
            <p>이진 신호 주기점 분석 API가 실행 중입니다.</p>
            <p><a href="/docs">Swagger UI</a> | <a href="/redoc">ReDoc</a></p>
        </body>
    </html>
    """


@app.post("/api/eval", response_model=EvalResponse, tags=["Signal"])
async def evaluate(request: EvalRequest) -> EvalResponse:
    """x(t) 와 왼쪽 극한 x(t-0) 을 계산합니다."""
    x = _load_signal(request)
    t = parse_rat(request.t)
    return EvalResponse(t=request.t, value=str(x.eval(t)), left_limit=str(x.left_limit(t)))


@app.post("/api/fiber", response_model=FiberResponse, tags=["Signal"])
async def compute_fiber(request: FiberRequest) -> FiberResponse:
    """T_μ^x 를 계산합니다. 창이 주어지면 그 안의 최대 구간도 돌려줍니다."""
    x = _load_signal(request)
    S = _run_domain(fiber, x, request.mu_vector)

    pieces = []
    if request.window_from is not None and request.window_to is not None:
        lo, hi = parse_rat(request.window_from), parse_rat(request.window_to)
        if hi <= lo:
            raise HTTPException(status_code=400, detail="window_to must be greater than window_from")
        pieces = [[format_rat(a), format_rat(b)] for a, b in S.intervals(lo, hi)]

    return FiberResponse(
        mu=request.mu,
        fiber=S.describe(),
        empty=S.is_empty(),
        sup=format_bound(S.sup_bound()),
        intervals=pieces,
    )


@app.post("/api/check", response_model=CheckResponse, tags=["Periodicity"])
async def check_point(request: CheckRequest) -> CheckResponse:
    """(T, t′) 가 μ 를 주기점으로 만드는지 판정합니다."""
    x = _load_signal(request)
    mu, T, tprime = request.mu_vector, parse_rat(request.T), parse_rat(request.tprime)
    accepted = _run_domain(check_periodic_point, x, mu, T, tprime)

    oracle_accepted = None
    if request.oracle:
        oracle_accepted = await run_in_threadpool(_run_domain, oracle_check, x, mu, T, tprime)
    return CheckResponse(accepted=accepted, oracle_accepted=oracle_accepted)


@app.post("/api/prime", response_model=PrimeResponse, tags=["Periodicity"])
async def compute_prime(request: PrimeRequest) -> PrimeResponse:
    """μ 의 소수 주기와 허용 t′ 구간을 구합니다."""
    x = _load_signal(request)
    mu = request.mu_vector
    verdict = await run_in_threadpool(_run_domain, prime_period, x, mu)

    window = verdict.window
    response = PrimeResponse(
        verdict=verdict.kind.value,
        T=format_rat(verdict.period) if verdict.period is not None else None,
        tprime_lo=(format_bound(window.lo) if window.lo is not None else "-inf") if window else None,
        tprime_hi=(format_bound(window.hi) if window.hi is not None else "inf") if window else None,
        note=verdict.note,
    )
    if request.oracle:
        result = await run_in_threadpool(_run_domain, oracle_prime_scan, x, mu)
        response.oracle_T = format_rat(result.period) if result.period is not None else None
        response.oracle_note = result.note
    return response


@app.post("/api/verify76", response_model=Verify76Response, tags=["Periodicity"])
async def verify_t0_t1(request: Verify76Request) -> Verify76Response:
    """초기값에 대한 t0/t1 경계와 정규 합집합 포함을 확인합니다."""
    x = _load_signal(request)
    report = _run_domain(check_theorem76, x, parse_rat(request.T), parse_rat(request.tprime))
    return Verify76Response(
        t0=format_rat(report.t0),
        t1=format_rat(report.t1),
        bound_ok=report.bound_ok,
        inclusion_ok=report.inclusion_ok,
    )


@app.post("/api/analyze", response_model=AnalyzeResponse, tags=["Analysis"])
async def analyze_signal(request: AnalyzeRequest) -> AnalyzeResponse:
    """전체 분석 워크플로우를 실행합니다."""
    x = _load_signal(request)
    cfg = OracleConfig() if request.horizon is None else OracleConfig(horizon_periods=request.horizon)

    try:
        final_state = await run_in_threadpool(run_signal_analysis, x, False, cfg)
    except SigPeriodError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

    points = [dict(point) for point in final_state.get("points", [])]
    return AnalyzeResponse(
        orbit=final_state.get("orbit", []),
        fibers=final_state.get("fibers", {}),
        points=points,
        canonical_fiber=final_state.get("canonical_fiber"),
        theorem76=final_state.get("theorem76"),
        oracle_agrees=all(point.get("oracle_agrees", False) for point in points),
        report_markdown=final_state.get("report_markdown", ""),
    )


@app.get("/health", tags=["Health"])
async def health_check() -> Dict[str, Any]:
    """간단한 헬스 체크."""
    return {
        "status": "healthy",
        "version": app.version,
        "features": {
            "periodicity_analysis": True,
            "oracle_cross_check": True,
            "report_generation": True,
        },
    }
