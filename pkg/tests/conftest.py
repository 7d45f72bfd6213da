import pytest

from qshuffle import engine


def pytest_addoption(parser):
    parser.addoption("--heavy", action="store_true", default=False, help="run heavy reference computations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--heavy"):
        return
    skip = pytest.mark.skip(reason="needs --heavy")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def g2():
    return engine("G2")


@pytest.fixture(scope="session")
def engines():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = engine(name)
        return cache[name]

    return get


_REPORT = []


@pytest.fixture
def report():
    return _REPORT


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in _REPORT:
            terminalreporter.write_line(line)
