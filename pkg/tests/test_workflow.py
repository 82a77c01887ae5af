"""analysis-workflow: LangGraph 파이프라인과 보고서"""

import pytest

from sigperiod import OracleConfig, build_workflow, constant_signal, run_signal_analysis
from sigperiod.report import build_markdown_report, save_report

from .conftest import ONE


def test_workflow_has_all_nodes():
    graph = build_workflow()
    assert {"orbit", "fibers", "periodicity", "theorem", "oracle", "report"} <= set(graph.nodes)


def test_analysis_of_xstar(xstar):
    state = run_signal_analysis(xstar, oracle_config=OracleConfig(horizon_periods=2))
    assert state["orbit"] == ["0", "1"]
    points = {point["mu"]: point for point in state["points"]}
    assert points["1"]["verdict"] == "prime"
    assert points["1"]["period"] == "5"
    assert (points["1"]["tprime_lo"], points["1"]["tprime_hi"]) == ("-2", "0")
    assert all(point["oracle_agrees"] for point in state["points"])
    assert state["canonical_fiber"] is None
    assert state["theorem76"]["t0"] == "0"
    assert state["theorem76"]["t1"] == "3"
    assert state["theorem76"]["bound_ok"] and state["theorem76"]["inclusion_ok"]
    assert "# 신호 주기점 분석 보고서" in state["report_markdown"]


def test_analysis_of_constant_signal():
    state = run_signal_analysis(constant_signal(ONE))
    assert [point["verdict"] for point in state["points"]] == ["no_prime"]
    assert state["points"][0]["oracle_agrees"]
    assert state["theorem76"] is None
    assert "생략" in state["report_markdown"]


def test_verbose_progress_goes_to_stderr(capsys, xstar):
    run_signal_analysis(xstar, verbose=True)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[Periodicity Node]" in captured.err


def test_report_lists_every_point(xstar):
    state = run_signal_analysis(xstar)
    report = build_markdown_report(state)
    assert report.count("| `") == 2
    assert "```" in report


def test_save_report(tmp_path, xstar):
    state = run_signal_analysis(xstar)
    md_path = save_report(state["report_markdown"], tmp_path / "out")
    assert md_path.read_text(encoding="utf-8") == state["report_markdown"]
    html = (tmp_path / "out" / "signal_report.html").read_text(encoding="utf-8")
    assert "<table>" in html


def test_save_empty_report_fails(tmp_path):
    with pytest.raises(RuntimeError):
        save_report("  ", tmp_path)
