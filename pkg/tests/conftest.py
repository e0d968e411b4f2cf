import pytest

from toricchow import corpus

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def p2():
    return corpus.projective_space(2)


@pytest.fixture(scope="session")
def p3():
    return corpus.projective_space(3)


@pytest.fixture(scope="session")
def p1xp1():
    return corpus.p1xp1()


@pytest.fixture(scope="session")
def square_cone():
    return corpus.square_cone_fan()


@pytest.fixture(scope="session")
def affine_line():
    return corpus.affine_line()


@pytest.fixture(scope="session")
def smooth_corpus():
    return corpus.smooth_complete_corpus()


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        ACCEPTANCE_RESULTS[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split("_")[2])):
        outcome = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
