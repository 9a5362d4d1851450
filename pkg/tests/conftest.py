from __future__ import annotations

import pytest

from spcss.css import build
from spcss.cyclic import parse_code_spec
from spcss.gf2 import BitMatrix

from .oracles import STEANE_H_ROWS


@pytest.fixture(scope="session")
def steane_H() -> BitMatrix:
    return BitMatrix.from_strings(STEANE_H_ROWS)


@pytest.fixture(scope="session")
def c7():
    return parse_code_spec("n=7 g=1101")


@pytest.fixture(scope="session")
def steane(c7):
    return build(c7)
