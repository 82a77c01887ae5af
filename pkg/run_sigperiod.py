"""
SigPeriod 메인 실행 파일
인자로 신호 문서 경로를 주면 그 신호를, 없으면 예제 신호 X* 를 분석합니다.
"""

import json
import sys
from pathlib import Path

from dotenv import load_dotenv

from sigperiod import parse, run_signal_analysis
from sigperiod.config import REPORT_DIR
from sigperiod.report import save_report

# 환경 변수 로드
load_dotenv()

SAMPLE_DOCUMENT = """\
signal v1
width 1
init 1
at 0 -> 0
at 1 -> 1
at 2 -> 0
cycle start 3 period 5
at +0 -> 1
at +2 -> 0
at +3 -> 1
at +4 -> 0
"""


def main():
    """메인 실행 함수"""

    print("=" * 80)
    print("SigPeriod - 궁극적 주기 이진 신호 주기점 분석")
    print("=" * 80)
    print()

    if len(sys.argv) > 1:
        document = Path(sys.argv[1]).read_bytes()
    else:
        document = SAMPLE_DOCUMENT

    final_state = run_signal_analysis(parse(document), verbose=True)

    # 결과 저장
    output_file = "signal_analysis_result.json"

    # 신호/설정 객체는 제외하고 JSON 으로 직렬화 가능한 부분만 저장
    output_data = {
        "orbit": final_state.get("orbit", []),
        "fibers": final_state.get("fibers", {}),
        "points": final_state.get("points", []),
        "canonical_fiber": final_state.get("canonical_fiber"),
        "theorem76": final_state.get("theorem76"),
        "oracle_periods": final_state.get("oracle_periods", {}),
    }

    with open(output_file, "w", encoding="utf-8") as f:
        json.dump(output_data, f, ensure_ascii=False, indent=2)

    print(f"📊 분석 결과 저장: {output_file}")

    report_path = save_report(final_state["report_markdown"], REPORT_DIR)
    print(f"\n📄 보고서 파일:")
    print(f"   - Markdown: {report_path}")
    print(f"   - HTML: {report_path.with_suffix('.html')}")

    points = final_state.get("points", [])
    agreed = sum(1 for point in points if point.get("oracle_agrees"))
    status_icon = "✅" if agreed == len(points) else "⚠️"
    print(f"\n🧪 오라클 교차 검증: {status_icon} {agreed}/{len(points)} 일치")


if __name__ == "__main__":
    main()
