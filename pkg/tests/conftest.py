from pathlib import Path

import pytest

from e6chev.constants import derive_constants, evaluate_table
from e6chev.liealg import AdjointRep, build_algebra
from e6chev.rootsys import build_e6

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def system():
    return build_e6()


@pytest.fixture(scope="session")
def symbolic():
    return derive_constants()


@pytest.fixture(scope="session")
def numeric(symbolic):
    return evaluate_table(symbolic)


@pytest.fixture(scope="session")
def algebra(numeric):
    return build_algebra(numeric)


@pytest.fixture(scope="session")
def adjoint(algebra):
    return AdjointRep(algebra)
