"""
SigPeriod 명령줄 인터페이스

종료 코드: 0 = 성공 또는 참 판정, 1 = 거짓/부정 판정, 2 = 사용법 또는 입력 오류
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from .config import REPORT_DIR, OracleConfig
from .errors import SigFormatError, SigPeriodError
from .models import BinaryVector, TPrimeWindow, VerdictKind
from .oracle import oracle_check, oracle_prime_scan
from .periodicity import (
    check_periodic_point,
    check_theorem76,
    derive_t0_t1,
    prime_period,
    valid_tprime_interval,
)
from .report import save_report
from .sigfmt import parse, parse_chi_expr
from .signal import UPSignal
from .upset import fiber
from .utils import format_bound, format_rat, log_progress, parse_rat

MAX_RENDER_SAMPLES = 10000

# 음수 유리수를 값으로 받는 옵션 (argparse 는 '-2/3' 을 옵션으로 오인한다)
_RATIONAL_FLAGS = {
    "-t": "--time",
    "--time": "--time",
    "--T": "--T",
    "--tprime": "--tprime",
    "--from": "--from",
    "--to": "--to",
    "--step": "--step",
}
_NEGATIVE_RAT = re.compile(r"^-[0-9]+(/[0-9]+)?$")


@dataclass(frozen=True)
class CLIError(RuntimeError):
    """종료 코드를 가진 CLI 오류"""

    message: str
    exit_code: int = 2

    def __str__(self) -> str:
        return self.message


# ---------------------------------------------------------------------------
# 인자 타입
# ---------------------------------------------------------------------------


def rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def positive_period(text: str) -> Fraction:
    value = rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"T must be positive, got {format_rat(value)}")
    return value


def positive_step(text: str) -> Fraction:
    value = rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"step must be positive, got {format_rat(value)}")
    return value


def bits(text: str) -> BinaryVector:
    try:
        return BinaryVector.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    """모든 하위 명령을 가진 argparse 파서를 만듭니다."""
    parser = argparse.ArgumentParser(
        prog="sigperiod",
        description=(
            "Exact periodicity analysis of ultimately periodic binary signals.\n\n"
            "Examples:\n"
            "  sigperiod eval -t 4 xstar.sig\n"
            "  sigperiod prime --mu 1 xstar.sig --json\n"
            "  sigperiod check --mu 1 --T 5 --tprime -1 xstar.sig\n"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="signal document path, '-' for stdin (default)")
    common.add_argument("--json", action="store_true", default=False, help="emit a single JSON object")
    common.add_argument(
        "--format",
        dest="input_format",
        choices=("sig", "chi"),
        default="sig",
        help="input format: line document (sig) or chi expression (chi)",
    )
    common.add_argument("--verbose", "-v", action="store_true", default=False, help="show progress on stderr")

    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, handler, parents=(common,)) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=list(parents), help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add("eval", "value x(t)", _cmd_eval)
    sub.add_argument("-t", "--time", dest="t", type=rational, required=True)

    sub = add("leftlimit", "left limit x(t-0)", _cmd_leftlimit)
    sub.add_argument("-t", "--time", dest="t", type=rational, required=True)

    add("orbit", "values taken by the signal", _cmd_orbit)

    sub = add("fiber", "time set where x equals mu", _cmd_fiber)
    sub.add_argument("--mu", type=bits, required=True)

    sub = add("check", "decide whether (T, t') makes mu a periodic point", _cmd_check)
    _add_check_flags(sub)

    sub = add("tprime-range", "exact set of admissible t' for a period T", _cmd_tprime_range)
    sub.add_argument("--mu", type=bits, required=True)
    sub.add_argument("--T", dest="T", type=positive_period, required=True)

    sub = add("prime", "prime period of mu", _cmd_prime)
    sub.add_argument("--mu", type=bits, required=True)

    sub = add("derive", "t0 and t1 of the initial value for a period T", _cmd_derive)
    sub.add_argument("--T", dest="T", type=positive_period, required=True)

    sub = add("verify76", "check the t0/t1 bound and canonical inclusion", _cmd_verify76)
    sub.add_argument("--T", dest="T", type=positive_period, required=True)
    sub.add_argument("--tprime", type=rational, required=True)

    oracle = subparsers.add_parser("oracle", help="brute-force checks of the definition")
    oracle_commands = oracle.add_subparsers(dest="oracle_command", required=True)
    sub = oracle_commands.add_parser("check", parents=[common], help="brute-force periodic point check")
    sub.set_defaults(handler=_cmd_oracle_check)
    _add_check_flags(sub)
    sub.add_argument("--horizon", type=positive_int, default=None, help="tail periods to enumerate")
    sub = oracle_commands.add_parser("prime", parents=[common], help="brute-force prime period search")
    sub.set_defaults(handler=_cmd_oracle_prime)
    sub.add_argument("--mu", type=bits, required=True)
    sub.add_argument("--horizon", type=positive_int, default=None, help="tail periods to enumerate")

    sub = add("render", "ASCII waveform, one row per bit", _cmd_render)
    sub.add_argument("--from", dest="start", type=rational, required=True)
    sub.add_argument("--to", dest="stop", type=rational, required=True)
    sub.add_argument("--step", type=positive_step, required=True)

    sub = add("analyze", "full analysis workflow with report", _cmd_analyze)
    sub.set_defaults(verbose=True)
    sub.add_argument(
        "--quiet", "-q", dest="verbose", action="store_false", help="hide workflow progress (shown by default)"
    )
    sub.add_argument(
        "--report-dir",
        nargs="?",
        const=str(REPORT_DIR),
        default=None,
        help=f"save signal_report.md/.html (default directory: {REPORT_DIR})",
    )
    sub.add_argument("--horizon", type=positive_int, default=None, help="oracle tail periods")

    return parser


def _add_check_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--mu", type=bits, required=True)
    sub.add_argument("--T", dest="T", type=positive_period, required=True)
    sub.add_argument("--tprime", type=rational, required=True)


def join_negative_values(argv: Sequence[str]) -> List[str]:
    """`--tprime -2/3` 를 `--tprime=-2/3` 로 붙입니다."""
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        long_flag = _RATIONAL_FLAGS.get(token)
        if long_flag is not None and index + 1 < len(argv) and _NEGATIVE_RAT.match(argv[index + 1]):
            joined.append(f"{long_flag}={argv[index + 1]}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


# ---------------------------------------------------------------------------
# 실행
# ---------------------------------------------------------------------------


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """argv 를 해석해 하위 명령을 실행하고 종료 코드를 돌려줍니다."""
    parser = build_parser()
    raw = list(argv) if argv is not None else sys.argv[1:]
    try:
        namespace = parser.parse_args(join_negative_values(raw))
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return int(namespace.handler(namespace))
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except SigFormatError as exc:
        print(f"error: {namespace.input}: {exc}", file=sys.stderr)
        return 2
    except SigPeriodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_cli(argv)


def cli_entrypoint() -> None:
    raise SystemExit(run_cli())


# ---------------------------------------------------------------------------
# 공통 도우미
# ---------------------------------------------------------------------------


def load_signal(args: argparse.Namespace) -> UPSignal:
    """입력 문서를 읽어 신호로 만듭니다."""
    verbose = getattr(args, "verbose", False)
    source = "stdin" if args.input == "-" else args.input
    log_progress(f"📄 [Input] {source} 읽는 중 (형식: {args.input_format})...", verbose)
    try:
        if args.input == "-":
            data = sys.stdin.buffer.read()
        else:
            data = Path(args.input).read_bytes()
    except OSError as exc:
        raise CLIError(f"cannot read {args.input}: {exc.strerror or exc}") from exc
    x = parse_chi_expr(data) if args.input_format == "chi" else parse(data)
    log_progress(f"   ✓ 폭 {x.width}, 궤도 {len(x.orbit())}개, 첫 스위치 {format_bound(x.first_switch())}", verbose)
    return x


def _inputs(args: argparse.Namespace, *names: str) -> Dict[str, Any]:
    inputs: Dict[str, Any] = {"input": args.input, "format": args.input_format}
    for name in names:
        value = getattr(args, name)
        if isinstance(value, Fraction):
            value = format_rat(value)
        elif isinstance(value, BinaryVector):
            value = str(value)
        inputs[name] = value
    return inputs


def _emit(
    args: argparse.Namespace,
    command: str,
    inputs: Mapping[str, Any],
    verdict: str,
    details: Mapping[str, Any],
    human: Sequence[str],
) -> None:
    """--json 이면 {command, inputs, verdict, details} 한 객체를, 아니면 사람이 읽는 줄들을 출력합니다.

    details 의 키는 최상위에도 복사합니다.
    """
    if args.json:
        payload: Dict[str, Any] = {"command": command, "inputs": dict(inputs), "verdict": verdict, "details": dict(details)}
        for key, value in details.items():
            payload.setdefault(key, value)
        print(json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False))
        return
    for line in human:
        print(line)


def _window_details(window: Optional[TPrimeWindow]) -> Dict[str, Optional[str]]:
    if window is None:
        return {"tprime_lo": None, "tprime_hi": None}
    return {
        "tprime_lo": "-inf" if window.lo is None else format_bound(window.lo),
        "tprime_hi": "inf" if window.hi is None else format_bound(window.hi),
    }


def _oracle_config(args: argparse.Namespace) -> OracleConfig:
    horizon = getattr(args, "horizon", None)
    return OracleConfig() if horizon is None else OracleConfig(horizon_periods=horizon)


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    x = load_signal(args)
    value = str(x.eval(args.t))
    _emit(args, "eval", _inputs(args, "t"), value, {"value": value}, [value])
    return 0


def _cmd_leftlimit(args: argparse.Namespace) -> int:
    x = load_signal(args)
    value = str(x.left_limit(args.t))
    _emit(args, "leftlimit", _inputs(args, "t"), value, {"value": value}, [value])
    return 0


def _cmd_orbit(args: argparse.Namespace) -> int:
    x = load_signal(args)
    orbit = sorted(str(mu) for mu in x.orbit())
    _emit(args, "orbit", _inputs(args), "ok", {"orbit": orbit, "size": len(orbit)}, orbit)
    return 0


def _cmd_fiber(args: argparse.Namespace) -> int:
    x = load_signal(args)
    S = fiber(x, args.mu)
    text = S.describe()
    details = {"fiber": text, "empty": S.is_empty(), "sup": format_bound(S.sup_bound())}
    _emit(args, "fiber", _inputs(args, "mu"), "ok", details, [text])
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    x = load_signal(args)
    accepted = check_periodic_point(x, args.mu, args.T, args.tprime)
    verdict = "true" if accepted else "false"
    _emit(args, "check", _inputs(args, "mu", "T", "tprime"), verdict, {"accepted": accepted}, [verdict])
    return 0 if accepted else 1


def _cmd_tprime_range(args: argparse.Namespace) -> int:
    x = load_signal(args)
    window = valid_tprime_interval(x, args.mu, args.T)
    details = _window_details(window)
    if window is None:
        human, verdict = "none", "none"
    else:
        human, verdict = f"[{details['tprime_lo']}, {details['tprime_hi']})", "interval"
    _emit(args, "tprime-range", _inputs(args, "mu", "T"), verdict, details, [human])
    return 0 if window is not None else 1


def _cmd_prime(args: argparse.Namespace) -> int:
    x = load_signal(args)
    verdict = prime_period(x, args.mu)
    details: Dict[str, Any] = {"T": format_rat(verdict.period) if verdict.period is not None else None}
    details.update(_window_details(verdict.window))
    details["note"] = verdict.note
    if verdict.is_prime:
        human = [f"prime T={details['T']} t' in [{details['tprime_lo']}, {details['tprime_hi']})"]
    else:
        human = [verdict.kind.value + (f": {verdict.note}" if verdict.note else "")]
    _emit(args, "prime", _inputs(args, "mu"), verdict.kind.value, details, human)
    return 0 if verdict.kind is VerdictKind.PRIME else 1


def _cmd_derive(args: argparse.Namespace) -> int:
    x = load_signal(args)
    t0, t1 = derive_t0_t1(x, args.T)
    details = {"t0": format_rat(t0), "t1": format_rat(t1)}
    _emit(args, "derive", _inputs(args, "T"), "ok", details, [f"t0={details['t0']} t1={details['t1']}"])
    return 0


def _cmd_verify76(args: argparse.Namespace) -> int:
    x = load_signal(args)
    report = check_theorem76(x, args.T, args.tprime)
    holds = report.bound_ok and report.inclusion_ok
    details = {
        "t0": format_rat(report.t0),
        "t1": format_rat(report.t1),
        "bound_ok": report.bound_ok,
        "inclusion_ok": report.inclusion_ok,
    }
    human = [
        f"t0={details['t0']} t1={details['t1']}",
        f"bound_ok={str(report.bound_ok).lower()} inclusion_ok={str(report.inclusion_ok).lower()}",
    ]
    _emit(args, "verify76", _inputs(args, "T", "tprime"), "true" if holds else "false", details, human)
    return 0 if holds else 1


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    x = load_signal(args)
    accepted = oracle_check(x, args.mu, args.T, args.tprime, _oracle_config(args), verbose=args.verbose)
    verdict = "true" if accepted else "false"
    inputs = _inputs(args, "mu", "T", "tprime", "horizon")
    _emit(args, "oracle check", inputs, verdict, {"accepted": accepted}, [verdict])
    return 0 if accepted else 1


def _cmd_oracle_prime(args: argparse.Namespace) -> int:
    x = load_signal(args)
    result = oracle_prime_scan(x, args.mu, _oracle_config(args), verbose=args.verbose)
    T = format_rat(result.period) if result.period is not None else None
    verdict = "prime" if T is not None else "none"
    human = [f"prime T={T}" if T is not None else f"none: {result.note}"]
    details = {"T": T, "note": result.note, "degenerate": result.is_degenerate}
    _emit(args, "oracle prime", _inputs(args, "mu", "horizon"), verdict, details, human)
    return 0 if T is not None else 1


def render_rows(x: UPSignal, start: Fraction, stop: Fraction, step: Fraction) -> List[str]:
    """[start, stop) 를 step 간격으로 표본화한 ASCII 파형 (1 = '#', 0 = '_')

    Raises:
        CLIError: 빈 구간이거나 표본이 너무 많은 경우
    """
    if stop <= start:
        raise CLIError(f"--to must be greater than --from, got [{format_rat(start)}, {format_rat(stop)})")
    count = -((start - stop) // step)
    if count > MAX_RENDER_SAMPLES:
        raise CLIError(f"--step too small: {count} samples exceed the limit of {MAX_RENDER_SAMPLES}")
    samples = [x.eval(start + k * step) for k in range(count)]
    label_width = len(f"x{x.width - 1}")
    return [
        f"{f'x{i}'.ljust(label_width)} |" + "".join("#" if value.bits[i] else "_" for value in samples)
        for i in range(x.width)
    ]


def _cmd_render(args: argparse.Namespace) -> int:
    x = load_signal(args)
    rows = render_rows(x, args.start, args.stop, args.step)
    _emit(args, "render", _inputs(args, "start", "stop", "step"), "ok", {"rows": rows}, rows)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    from .workflow import run_signal_analysis

    x = load_signal(args)
    state = run_signal_analysis(x, verbose=args.verbose, oracle_config=_oracle_config(args))
    report_path = None
    if args.report_dir is not None:
        report_path = save_report(state["report_markdown"], Path(args.report_dir))
        log_progress(f"📊 보고서 저장: {report_path}", args.verbose)

    points = state.get("points", [])
    agrees = all(point.get("oracle_agrees", False) for point in points)
    details = {
        "orbit": state.get("orbit", []),
        "points": points,
        "canonical_fiber": state.get("canonical_fiber"),
        "theorem76": state.get("theorem76"),
        "oracle_agrees": agrees,
        "report_path": str(report_path) if report_path is not None else None,
    }
    _emit(args, "analyze", _inputs(args), "agree" if agrees else "disagree", details, [state["report_markdown"]])
    return 0 if agrees else 1
