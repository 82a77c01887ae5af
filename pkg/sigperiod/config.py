"""
환경 변수(.env) 기반 설정
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise RuntimeError(f"environment variable {name} must be an integer, got {raw!r}") from exc


DEFAULT_HORIZON_PERIODS = _env_int("SIGPERIOD_ORACLE_HORIZON", 3)
API_HOST = os.getenv("SIGPERIOD_API_HOST", "0.0.0.0")
API_PORT = _env_int("SIGPERIOD_API_PORT", 8000)
REPORT_DIR = Path(os.getenv("SIGPERIOD_REPORT_DIR", "report"))


class OracleConfig(BaseModel):
    """브루트포스 오라클의 표본 범위 설정"""

    horizon_periods: int = Field(
        default_factory=lambda: DEFAULT_HORIZON_PERIODS,
        ge=1,
        description="안정화 이후 추가로 나열할 꼬리 주기 수",
    )
    z_bound: Optional[int] = Field(
        default=None,
        ge=1,
        description="|z| 나열 상한 (None 이면 horizon 에서 유도)",
    )

    def doubled(self) -> "OracleConfig":
        """horizon 을 두 배로 늘린 설정 (안정성 점검용)"""
        return OracleConfig(horizon_periods=self.horizon_periods * 2, z_bound=self.z_bound)
