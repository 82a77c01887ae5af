"""FastAPI entrypoint for the SigPeriod service."""

from .main import app

__all__ = ["app"]
