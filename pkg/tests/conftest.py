import pathlib

import pytest

from infgon.dsl import parse_family

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture
def fountain_text() -> str:
    return fixture_text("fountain.arcs")


@pytest.fixture
def leapfrog_text() -> str:
    return fixture_text("leapfrog.arcs")


@pytest.fixture
def split_text() -> str:
    return fixture_text("split.arcs")


@pytest.fixture
def fountain(fountain_text):
    return parse_family(fountain_text)


@pytest.fixture
def leapfrog(leapfrog_text):
    return parse_family(leapfrog_text)


@pytest.fixture
def split(split_text):
    return parse_family(split_text)
