"""SigPeriod API 서버 실행기 (uvicorn)

    python backend/run_server.py --port 9000 --reload
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import uvicorn
from dotenv import load_dotenv

# 프로젝트 루트를 Python 경로에 추가
PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

load_dotenv()

from sigperiod.config import API_HOST, API_PORT  # noqa: E402
from sigperiod.utils import log_progress  # noqa: E402

DEFAULT_APP = "api.main:app"


def port_number(text: str) -> int:
    try:
        port = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"port must be an integer, got {text!r}") from exc
    if not 1 <= port <= 65535:
        raise argparse.ArgumentTypeError(f"port must be in 1..65535, got {port}")
    return port


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="run_server", description="Start the SigPeriod FastAPI service.")
    parser.add_argument("--app", default=DEFAULT_APP, help=f"ASGI import path (default: {DEFAULT_APP})")
    parser.add_argument("--host", default=API_HOST, help="bind address (SIGPERIOD_API_HOST)")
    parser.add_argument("--port", type=port_number, default=API_PORT, help="bind port (SIGPERIOD_API_PORT)")
    parser.add_argument("--reload", action=argparse.BooleanOptionalAction, default=False, help="auto-reload on code changes")
    parser.add_argument("--log-level", default="info", choices=("critical", "error", "warning", "info", "debug"))
    return parser


def server_options(args: argparse.Namespace) -> Dict[str, Any]:
    """uvicorn.run 에 넘길 키워드 인자"""
    return {"host": args.host, "port": args.port, "reload": args.reload, "log_level": args.log_level}


def banner(host: str, port: int) -> List[str]:
    shown = "127.0.0.1" if host in ("0.0.0.0", "::") else host
    return [
        "=" * 60,
        "🚀  SigPeriod API 서버 기동",
        "=" * 60,
        f"· 주소:    http://{shown}:{port}",
        f"· 문서:    http://{shown}:{port}/docs",
        f"· ReDoc:  http://{shown}:{port}/redoc",
        "=" * 60,
    ]


def main(argv: Optional[Sequence[str]] = None) -> None:
    args = build_parser().parse_args(argv)
    for line in banner(args.host, args.port):
        log_progress(line)
    uvicorn.run(args.app, **server_options(args))


if __name__ == "__main__":
    main()
