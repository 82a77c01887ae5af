"""
분석 보고서 생성 - Markdown 본문과 HTML 사본
"""

from pathlib import Path
from typing import List

from markdown import markdown

from .models import AnalysisState
from .sigfmt import serialize

VERDICT_LABELS = {
    "prime": "✅ 소수 주기 존재",
    "no_prime": "♾️ 모든 T>0 가 주기 (최소값 없음)",
    "not_periodic": "❌ 주기점 아님",
    "not_in_orbit": "➖ 궤도 밖",
}

HTML_STYLE = """
body { font-family: 'Apple SD Gothic Neo', 'Nanum Gothic', 'Noto Sans CJK KR', sans-serif; font-size: 11pt; line-height: 1.6; margin: 20mm; }
h1, h2, h3 { color: #1a237e; }
h1 { border-bottom: 3px solid #1a237e; padding-bottom: 10px; }
h2 { border-bottom: 1px solid #9fa8da; padding-bottom: 5px; margin-top: 20px; }
table { border-collapse: collapse; }
th, td { border: 1px solid #9fa8da; padding: 4px 8px; }
pre { background: #f5f5f5; padding: 8px; }
"""


def build_markdown_report(state: AnalysisState) -> str:
    """워크플로우 상태로부터 Markdown 보고서를 만듭니다.

    Args:
        state: orbit/fibers/points/theorem76/oracle_periods 가 채워진 상태

    Returns:
        Markdown 텍스트
    """
    x = state["signal"]
    lines: List[str] = [
        "# 신호 주기점 분석 보고서",
        "",
        "## 1. 신호",
        "",
        "```",
        serialize(x).rstrip(),
        "```",
        "",
        f"- 폭: {x.width}",
        f"- 초기값 x(-∞+0): `{x.initial_value}`",
        f"- 궤도: {', '.join(f'`{mu}`' for mu in state.get('orbit', []))}",
        "",
        "## 2. 시간 집합 T_μ",
        "",
    ]
    for mu, text in state.get("fibers", {}).items():
        lines.append(f"- `{mu}`: {text}")
    lines += [
        "",
        "## 3. 주기점 판정",
        "",
        "| μ | 판정 | 소수 주기 | 허용 t′ | 오라클 |",
        "|---|------|-----------|---------|--------|",
    ]
    for point in state.get("points", []):
        window = "-"
        if point.get("verdict") == "prime":
            window = f"[{point.get('tprime_lo') or '-inf'}, {point.get('tprime_hi') or 'inf'})"
        oracle = point.get("oracle_period") or "none"
        if point.get("oracle_note") and not point.get("oracle_period"):
            oracle += f" ({point['oracle_note']})"
        if "oracle_agrees" in point:
            oracle += " ✓" if point["oracle_agrees"] else " ✗"
        lines.append(
            f"| `{point['mu']}` | {VERDICT_LABELS.get(point['verdict'], point['verdict'])} "
            f"| {point.get('period') or '-'} | {window} | {oracle} |"
        )

    lines += ["", "## 4. 초기값에 대한 정리 검증", ""]
    canonical = state.get("canonical_fiber")
    if canonical:
        lines.append(
            f"- 정규 fiber 형태: t0={canonical['t0']}, t1={canonical['t1']}, T={canonical['T']} "
            f"(허용 t′ = [{canonical['t1']}−{canonical['T']}, {canonical['t0']}))"
        )
    else:
        lines.append("- 정규 fiber 형태 아님")
    theorem76 = state.get("theorem76")
    if theorem76:
        lines += [
            f"- T={theorem76['T']}, t′={theorem76['tprime']} 에서 t0={theorem76['t0']}, t1={theorem76['t1']}",
            f"- t1−T ≤ t′ < t0 < t1: {'✅' if theorem76['bound_ok'] else '❌'}",
            f"- 정규 합집합 ⊆ T_μ: {'✅' if theorem76['inclusion_ok'] else '❌'}",
        ]
    else:
        lines.append("- 초기값이 소수 주기를 갖지 않아 t0/t1 검증을 생략했습니다.")
    lines.append("")
    return "\n".join(lines)


def save_report(markdown_text: str, output_dir: Path) -> Path:
    """Markdown 보고서를 .md 로 저장하고 HTML 사본을 함께 만듭니다.

    Args:
        markdown_text: 보고서 텍스트
        output_dir: 저장 디렉토리

    Returns:
        저장된 Markdown 파일 경로
    """
    if not markdown_text.strip():
        raise RuntimeError("report is empty, nothing to save")

    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    md_path = output_dir / "signal_report.md"
    html_path = output_dir / "signal_report.html"

    md_path.write_text(markdown_text, encoding="utf-8")
    html_body = markdown(markdown_text, extensions=["extra", "toc", "tables", "fenced_code"])
    html_path.write_text(
        "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">"
        f"<style>{HTML_STYLE}</style></head><body>\n{html_body}\n</body></html>\n",
        encoding="utf-8",
    )
    return md_path
