import pytest

from polyslcs.gen import FIGURE1_VERTICES, TRIANGLE_VERTICES, cell_id, gen_figure1, gen_random, gen_triangle
from polyslcs.geometry import build_cell_poset

CORPUS_SIZE = 200


def corpus_model(seed):
    """Seeded random poset model: 2..12 elements, 1..3 letters (mostly 2 or 3)."""
    letters = 1 if seed % 10 == 0 else 2 + (seed // 2) % 2
    return gen_random(seed, element_count=2 + seed % 11, letter_count=letters,
                      density=0.15 + 0.1 * (seed % 5))


def tri(*labels):
    return {cell_id(x, TRIANGLE_VERTICES) for x in labels}


def fig(*labels):
    return {cell_id(x, FIGURE1_VERTICES) for x in labels}


@pytest.fixture(scope="session")
def triangle():
    return gen_triangle()


@pytest.fixture(scope="session")
def triangle_poset(triangle):
    return build_cell_poset(triangle)


@pytest.fixture(scope="session")
def figure1():
    return gen_figure1()


@pytest.fixture(scope="session")
def figure1_poset(figure1):
    return build_cell_poset(figure1)


@pytest.fixture(scope="session")
def corpus():
    return [corpus_model(seed) for seed in range(CORPUS_SIZE)]


# -- acceptance report -----------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or report.failed:
        _criteria[mark.args[0]] = (mark.args[1], report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, outcome = _criteria[num]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}  {title}")
