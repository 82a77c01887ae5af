"""
주기점 분석 모듈들
정의 판정, 허용 t′ 구간, 소수 주기, 정규 fiber, t0/t1 유도, 구간 이동 닫힘
"""

from .periodic_point import check_periodic_point, valid_tprime_interval
from .prime import prime_period
from .canonical import canonical_union, check_theorem75b, detect_canonical_fiber
from .theorem76 import check_theorem76, derive_t0_t1
from .lemma8 import lemma8_closure

__all__ = [
    "check_periodic_point",
    "valid_tprime_interval",
    "prime_period",
    "canonical_union",
    "detect_canonical_fiber",
    "check_theorem75b",
    "derive_t0_t1",
    "check_theorem76",
    "lemma8_closure",
]
