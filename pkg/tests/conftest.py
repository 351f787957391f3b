import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import sbgraph as sg  # noqa: E402

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fixture_path(name):
    return FIXTURES / name


def load_fixture(name):
    return sg.parse_edge_list(fixture_path(name).read_text())


@pytest.fixture(scope="session")
def fig1():
    return load_fixture("fig1.edges")


@pytest.fixture(scope="session")
def fig2():
    return load_fixture("fig2.edges")


@pytest.fixture(scope="session")
def fig1_path():
    return str(fixture_path("fig1.edges"))


@pytest.fixture(scope="session")
def fig2_path():
    return str(fixture_path("fig2.edges"))
