"""
LangGraph Workflow 빌드 및 실행
"""

from typing import Optional

from langgraph.graph import END, START, StateGraph

from .config import OracleConfig
from .models import AnalysisState
from .nodes import (
    fibers_node,
    oracle_node,
    orbit_node,
    periodicity_node,
    report_node,
    theorem_node,
)
from .signal import UPSignal
from .utils import log_progress


def build_workflow() -> StateGraph:
    """신호 분석 워크플로우를 구성합니다.

    실행 순서:
    1. orbit: 궤도 계산
    2. fibers: 궤도의 각 점의 시간 집합
    3. periodicity: 각 점의 소수 주기
    4-5. [병렬 실행]
         - theorem: 초기값의 정규 fiber / t0·t1 검증
         - oracle: 브루트포스 소수 주기
    6. report: 오라클 일치 여부를 합쳐 보고서 작성 (theorem + oracle 완료 후)
    """
    graph = StateGraph(AnalysisState)

    graph.add_node("orbit", orbit_node)
    graph.add_node("fibers", fibers_node)
    graph.add_node("periodicity", periodicity_node)
    graph.add_node("theorem", theorem_node)
    graph.add_node("oracle", oracle_node)
    graph.add_node("report", report_node)

    graph.add_edge(START, "orbit")
    graph.add_edge("orbit", "fibers")
    graph.add_edge("fibers", "periodicity")

    # 병렬 실행: 정리 검증과 오라클 교차 검증
    graph.add_edge("periodicity", "theorem")
    graph.add_edge("periodicity", "oracle")

    graph.add_edge("theorem", "report")
    graph.add_edge("oracle", "report")
    graph.add_edge("report", END)

    return graph


def run_signal_analysis(
    x: UPSignal,
    verbose: bool = False,
    oracle_config: Optional[OracleConfig] = None,
) -> AnalysisState:
    """신호 전체 분석을 실행합니다.

    Args:
        x: 분석할 신호
        verbose: 진행 상황을 stderr 로 출력할지 여부
        oracle_config: 오라클 표본 범위 (None 이면 환경 설정 기본값)

    Returns:
        최종 상태 (보고서 포함)
    """
    app = build_workflow().compile()

    initial_state: AnalysisState = {
        "signal": x,
        "verbose": verbose,
        "oracle_config": oracle_config or OracleConfig(),
        "orbit": [],
        "fibers": {},
        "points": [],
        "canonical_fiber": None,
        "theorem76": None,
        "oracle_periods": {},
        "oracle_notes": {},
        "report_markdown": "",
    }

    log_progress("🚀 [SigPeriod] Workflow 시작...\n", verbose)
    log_progress("=" * 80, verbose)
    final_state = app.invoke(initial_state)
    log_progress("=" * 80, verbose)
    log_progress("✅ [SigPeriod] Workflow 완료!\n", verbose)

    return final_state
