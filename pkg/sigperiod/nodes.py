"""
LangGraph 노드 함수들
각 분석 단계를 LangGraph 노드로 래핑합니다.
"""

from typing import Any, Dict, List, Optional

from .models import AnalysisState, BinaryVector, PointReport, VerdictKind
from .oracle import oracle_prime_scan
from .periodicity import check_theorem76, detect_canonical_fiber, prime_period
from .report import build_markdown_report
from .upset import fiber
from .utils import format_bound, format_rat, log_progress


def _orbit(state: AnalysisState) -> List[BinaryVector]:
    return sorted(state["signal"].orbit(), key=str)


def orbit_node(state: AnalysisState) -> Dict[str, Any]:
    """궤도 노드: 신호가 취하는 값들을 모읍니다."""
    verbose = state.get("verbose", False)
    log_progress("🔍 [Orbit Node] 궤도 계산 중...", verbose)
    orbit = [str(mu) for mu in _orbit(state)]
    log_progress(f"   ✓ 궤도 ({len(orbit)}개): {orbit}\n", verbose)
    return {"orbit": orbit}


def fibers_node(state: AnalysisState) -> Dict[str, Any]:
    """fiber 노드: 궤도의 각 점 μ 에 대해 T_μ^x 를 구합니다."""
    verbose = state.get("verbose", False)
    log_progress("🧮 [Fiber Node] 시간 집합 계산 중...", verbose)
    x = state["signal"]
    fibers = {str(mu): fiber(x, mu).describe() for mu in _orbit(state)}
    for mu, text in fibers.items():
        log_progress(f"   ✓ T_{mu} = {text}", verbose)
    log_progress("", verbose)
    return {"fibers": fibers}


def periodicity_node(state: AnalysisState) -> Dict[str, Any]:
    """주기 노드: 궤도의 각 점의 소수 주기를 판정합니다."""
    verbose = state.get("verbose", False)
    log_progress("⏱️ [Periodicity Node] 소수 주기 분석 중...", verbose)
    x = state["signal"]
    points: List[PointReport] = []
    for mu in _orbit(state):
        verdict = prime_period(x, mu)
        window = verdict.window
        points.append({
            "mu": str(mu),
            "fiber": state.get("fibers", {}).get(str(mu), ""),
            "verdict": verdict.kind.value,
            "period": format_rat(verdict.period) if verdict.period is not None else None,
            "tprime_lo": format_bound(window.lo) if window is not None and window.lo is not None else None,
            "tprime_hi": format_bound(window.hi) if window is not None and window.hi is not None else None,
        })
        log_progress(f"   ✓ μ={mu}: {verdict.kind.value} {points[-1]['period'] or ''}", verbose)
    log_progress("", verbose)
    return {"points": points}


def theorem_node(state: AnalysisState) -> Dict[str, Any]:
    """정리 노드: 초기값에 대해 정규 fiber 여부와 t0/t1 결론을 확인합니다."""
    verbose = state.get("verbose", False)
    log_progress("📐 [Theorem Node] 초기값 μ 에 대한 정리 검증 중...", verbose)
    x = state["signal"]
    mu = x.initial_value

    canonical: Optional[Dict[str, str]] = None
    triple = detect_canonical_fiber(x, mu)
    if triple is not None:
        t0, t1, T = triple
        canonical = {"t0": format_rat(t0), "t1": format_rat(t1), "T": format_rat(T)}
        log_progress(f"   ✓ 정규 fiber: t0={canonical['t0']}, t1={canonical['t1']}, T={canonical['T']}", verbose)

    theorem76: Optional[Dict[str, Any]] = None
    verdict = prime_period(x, mu)
    if verdict.kind is VerdictKind.PRIME and not x.is_constant():
        window = verdict.window
        tprime = window.lo if window.lo is not None else window.hi - verdict.period
        report = check_theorem76(x, verdict.period, tprime)
        theorem76 = {
            "T": format_rat(verdict.period),
            "tprime": format_rat(tprime),
            "t0": format_rat(report.t0),
            "t1": format_rat(report.t1),
            "bound_ok": report.bound_ok,
            "inclusion_ok": report.inclusion_ok,
        }
        log_progress(
            f"   ✓ t0={theorem76['t0']}, t1={theorem76['t1']}, "
            f"bound_ok={report.bound_ok}, inclusion_ok={report.inclusion_ok}",
            verbose,
        )
    else:
        log_progress(f"   - 초기값 {mu} 는 {verdict.kind.value}: t0/t1 검증 생략", verbose)
    log_progress("", verbose)
    return {"canonical_fiber": canonical, "theorem76": theorem76}


def oracle_node(state: AnalysisState) -> Dict[str, Any]:
    """오라클 노드: 브루트포스로 소수 주기를 다시 구합니다."""
    verbose = state.get("verbose", False)
    log_progress("🧪 [Oracle Node] 브루트포스 교차 검증 중...", verbose)
    x = state["signal"]
    cfg = state.get("oracle_config")
    periods: Dict[str, Optional[str]] = {}
    notes: Dict[str, str] = {}
    for mu in _orbit(state):
        result = oracle_prime_scan(x, mu, cfg)
        periods[str(mu)] = format_rat(result.period) if result.period is not None else None
        notes[str(mu)] = result.note
        log_progress(f"   ✓ μ={mu}: {periods[str(mu)] or 'none'} {result.note}".rstrip(), verbose)
    log_progress("", verbose)
    return {"oracle_periods": periods, "oracle_notes": notes}


def report_node(state: AnalysisState) -> Dict[str, Any]:
    """보고서 노드: 해석 결과와 오라클 결과를 합쳐 Markdown 보고서를 만듭니다."""
    verbose = state.get("verbose", False)
    log_progress("📝 [Report Node] 보고서 작성 중...", verbose)
    oracle_periods = state.get("oracle_periods", {})
    points: List[PointReport] = []
    for point in state.get("points", []):
        oracle_period = oracle_periods.get(point["mu"])
        merged: PointReport = {**point, "oracle_period": oracle_period}
        merged["oracle_note"] = state.get("oracle_notes", {}).get(point["mu"], "")
        merged["oracle_agrees"] = oracle_period == point.get("period")
        points.append(merged)
    markdown_text = build_markdown_report({**state, "points": points})
    agreed = sum(1 for point in points if point["oracle_agrees"])
    log_progress(f"   ✓ 오라클 일치 {agreed}/{len(points)}\n", verbose)
    return {"points": points, "report_markdown": markdown_text}
