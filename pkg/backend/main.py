"""ASGI 진입점: `uvicorn backend.main:app` (컨테이너 CMD)"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# 스크립트로 실행될 때도 sigperiod / api 를 찾도록 프로젝트 루트를 경로에 추가
PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

# sigperiod.config 가 읽기 전에 .env 적용
load_dotenv()

from api.main import app  # noqa: E402

__all__ = ["app"]


if __name__ == "__main__":
    from backend.run_server import main

    main(["--app", "backend.main:app", *sys.argv[1:]])
