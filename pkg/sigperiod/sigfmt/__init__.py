"""
신호 텍스트 형식
줄 단위 정규 문서(`signal v1`)와 χ-합 표기
"""

from .document import SigDocument, parse, parse_document, serialize
from .chi import parse_chi_expr, serialize_chi

__all__ = [
    "SigDocument",
    "parse",
    "parse_document",
    "serialize",
    "parse_chi_expr",
    "serialize_chi",
]
