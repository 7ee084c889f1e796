import pytest
from hypothesis import HealthCheck, settings

from dikroma import _backend
from dikroma.digraph import directed_cycle, directed_path, complete_symmetric, symmetric

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run the test once per importable kernel backend."""
    previous = _backend.BACKEND
    _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(previous)


@pytest.fixture
def c3():
    return directed_cycle(3)


@pytest.fixture
def p3():
    return directed_path(3)


@pytest.fixture
def k3():
    return complete_symmetric(3)


@pytest.fixture
def sym_p4():
    return symmetric(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def d_star():
    # digons a<->b, b<->d, c<->d with a, b, c, d = 0, 1, 2, 3
    return symmetric(4, [(0, 1), (1, 3), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
