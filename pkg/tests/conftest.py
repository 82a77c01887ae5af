"""공용 fixture: 예제 신호 X* 와 그 문서"""

from pathlib import Path

import pytest

from sigperiod import BinaryVector, parse

ZERO = BinaryVector((0,))
ONE = BinaryVector((1,))

XSTAR_DOCUMENT = """\
signal v1
width 1
init 1
at 0 -> 0
at 1 -> 1
at 2 -> 0
cycle start 3 period 5
at +0 -> 1
at +2 -> 0
at +3 -> 1
at +4 -> 0
"""

XSTAR_CHI = "chi(-inf,0) ^ chi[1,2) ^ chi[3,5) ^ chi[6,7) repeat start=3 period=5"

# 꼬리와 어긋난 구간 [1, 3/2) 가 어떤 kT 이동으로도 fiber 에 들어가지 않는다
STRAY_SEGMENT_DOCUMENT = """\
signal v1
width 1
init 1
at 0 -> 0
at 1 -> 1
at 3/2 -> 0
cycle start 3 period 5
at +0 -> 1
at +2 -> 0
"""


@pytest.fixture
def xstar():
    return parse(XSTAR_DOCUMENT)


@pytest.fixture
def stray_segment():
    return parse(STRAY_SEGMENT_DOCUMENT)


@pytest.fixture
def xstar_path(tmp_path: Path) -> Path:
    path = tmp_path / "xstar.sig"
    path.write_text(XSTAR_DOCUMENT, encoding="utf-8")
    return path
