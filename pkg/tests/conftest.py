import random

import pytest

from galrpc import _backend
from galrpc.field import FieldParams


@pytest.fixture(params=sorted(_backend.AVAILABLE))
def backend(request):
    """Run the test once per available kernel backend."""
    previous = _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(previous)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def f8():
    return FieldParams(2, 3, (1, 1, 0, 1))


@pytest.fixture
def f2_11():
    return FieldParams.preset(11)


@pytest.fixture
def f2_31():
    return FieldParams.preset(31)


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    record = {"detail": ""}
    yield record
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    ACCEPTANCE_RESULTS[request.node.name] = (passed, record["detail"])


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, detail) in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
