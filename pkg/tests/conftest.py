import sys
from pathlib import Path

import pytest

from mahonian.filling import Filling, parse

DATA = Path(__file__).parent / "data"


def load(name: str) -> Filling:
    return parse((DATA / name).read_text())


@pytest.fixture
def example_sigma() -> Filling:
    """Six-row filling of shape (7,7,5,5,5,2) used for the end-to-end bijection trace."""
    return load("worked_example.txt")


@pytest.fixture
def example_gamma() -> Filling:
    return parse("4 5\n3 6 1 9 3\n4 8 9 2 5\n3 3 5 7 9\n7 8 4 6 4 8 5\n1 10 2 5 6 3 9")


@pytest.fixture
def example_varphi() -> Filling:
    return parse("4 5\n6 3 1 3 9\n8 4 5 9 2\n3 3 5 7 9\n7 8 4 4 6 8 5\n10 1 6 2 5 9 3")


@pytest.fixture
def flip_sigma() -> Filling:
    return load("flip_example.txt")


@pytest.fixture
def phi_sigma() -> Filling:
    return load("phi_example.txt")


@pytest.fixture
def asymmetric_sigma() -> Filling:
    return load("asymmetric_class.txt")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.LINES, key=lambda text: int(text.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
