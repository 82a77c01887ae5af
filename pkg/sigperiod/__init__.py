"""
SigPeriod - 궁극적 주기 이진 신호의 정확한 주기점 분석
LangGraph Workflow (해석적 판정 + 브루트포스 오라클 교차 검증)
"""

from .errors import (
    SigPeriodError,
    WidthMismatchError,
    NonIncreasingTimesError,
    BadPatternError,
    NonPositivePeriodError,
    NotInOrbitError,
    ConstantSignalError,
    PreconditionViolatedError,
    EmptyWordError,
    SigFormatError,
    SigSyntaxError,
    SigSemanticError,
    MissingRepeatClauseError,
)

from .models import (
    Rat,
    NEG_INF,
    POS_INF,
    BinaryVector,
    VerdictKind,
    Degenerate,
    TPrimeWindow,
    PeriodicityVerdict,
    Theorem76Report,
    OraclePrimeResult,
    PointReport,
    AnalysisState,
)

from .config import OracleConfig
from .signal import CycleSpec, UPSignal, constant_signal, make_signal
from .upset import TailView, UPSet, fiber, make_upset
from .periodicity import (
    canonical_union,
    check_periodic_point,
    check_theorem75b,
    check_theorem76,
    derive_t0_t1,
    detect_canonical_fiber,
    lemma8_closure,
    prime_period,
    valid_tprime_interval,
)
from .oracle import oracle_check, oracle_min_word_period, oracle_prime_period, oracle_prime_scan
from .sigfmt import parse, parse_chi_expr, serialize, serialize_chi
from .workflow import build_workflow, run_signal_analysis

__version__ = "1.0.0"
__all__ = [
    "SigPeriodError",
    "WidthMismatchError",
    "NonIncreasingTimesError",
    "BadPatternError",
    "NonPositivePeriodError",
    "NotInOrbitError",
    "ConstantSignalError",
    "PreconditionViolatedError",
    "EmptyWordError",
    "SigFormatError",
    "SigSyntaxError",
    "SigSemanticError",
    "MissingRepeatClauseError",
    "Rat",
    "NEG_INF",
    "POS_INF",
    "BinaryVector",
    "VerdictKind",
    "Degenerate",
    "TPrimeWindow",
    "PeriodicityVerdict",
    "Theorem76Report",
    "OraclePrimeResult",
    "PointReport",
    "AnalysisState",
    "OracleConfig",
    "CycleSpec",
    "UPSignal",
    "constant_signal",
    "make_signal",
    "TailView",
    "UPSet",
    "fiber",
    "make_upset",
    "canonical_union",
    "check_periodic_point",
    "check_theorem75b",
    "check_theorem76",
    "derive_t0_t1",
    "detect_canonical_fiber",
    "lemma8_closure",
    "prime_period",
    "valid_tprime_interval",
    "oracle_check",
    "oracle_min_word_period",
    "oracle_prime_period",
    "oracle_prime_scan",
    "parse",
    "parse_chi_expr",
    "serialize",
    "serialize_chi",
    "build_workflow",
    "run_signal_analysis",
]
