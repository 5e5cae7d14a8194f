import pytest

from limpack import kernels
from limpack.generators import disjoint_union, gen_named

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def petersen():
    return gen_named("petersen")


@pytest.fixture
def c6():
    return gen_named("cycle", 6)


@pytest.fixture
def p3():
    return gen_named("path", 3)


@pytest.fixture
def star3():
    return gen_named("star", 3)


@pytest.fixture
def two_petersen():
    p = gen_named("petersen")
    return disjoint_union(p, p)


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
