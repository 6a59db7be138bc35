from __future__ import annotations

from fractions import Fraction as F
from pathlib import Path

import pytest

from ewmtool import cases
from ewmtool.rootlat import Weight, build_root_system
from ewmtool.sphdata import Color, SphericalDatum


CASE_DIR = Path(__file__).resolve().parents[1] / "src" / "ewmtool" / "cases"


@pytest.fixture(scope="session")
def corpus():
    return {c.id: c for c in (cases.load_case(p) for p in cases.iter_case_paths(CASE_DIR))}


@pytest.fixture(scope="session")
def g2_datum():
    g2 = build_root_system("G2")
    return SphericalDatum(
        ambient=g2,
        sp=frozenset(),
        sigma=(Weight((1, 0), "root"), Weight((1, 1), "root")),
        colors=(
            Color("D1+", {1}, (F(1), F(0))),
            Color("D1-", {1}, (F(1), F(-1))),
            Color("D2", {2}, (F(-1), F(1))),
        ),
        wonderful=True,
    )


@pytest.fixture(scope="session")
def sec8_datum(corpus):
    return corpus["sec8_spin8_n3"].datum
