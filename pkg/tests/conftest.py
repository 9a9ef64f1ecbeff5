from pathlib import Path

import pytest

from wgcs.cyclotomy import whiteman
from wgcs.polyalg import from_human

DATA = Path(__file__).parent / "data"


def printed_generator(q, n1, n2):
    """Generator polynomial as printed in the worked examples, read from tests/data."""
    return from_human((DATA / f"gen_{q}_{n1}_{n2}.txt").read_text(), q)


@pytest.fixture(scope="session")
def c713():
    return whiteman(7, 13)


@pytest.fixture(scope="session")
def c719():
    return whiteman(7, 19)


@pytest.fixture(scope="session")
def c731():
    return whiteman(7, 31)


ACCEPTANCE = {}


def record(criterion, ok, detail):
    ACCEPTANCE[criterion] = (bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
