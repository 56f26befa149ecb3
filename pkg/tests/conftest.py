from pathlib import Path

import pytest

from distlat.fileformat import lattice_of, parse_input

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    return lattice_of(parse_input((FIXTURES / name).read_text()))


@pytest.fixture
def diamond():
    return load("diamond.lat")


@pytest.fixture
def b3():
    return load("b3.lat")


@pytest.fixture
def diamond2():
    return load("diamond2.lat")


@pytest.fixture
def v5():
    return load("v5.lat")


@pytest.fixture
def chain3():
    return load("chain3.lat")


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = mark.args
        _acceptance.append((number, item.name, title, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, title, passed in sorted(_acceptance):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  [{name}]")
