import zlib

import numpy as np
import pytest

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def rng(request):
    # stable per-test seed so failures reproduce
    seed = zlib.crc32(request.node.nodeid.encode())
    return np.random.default_rng(seed)


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda n: int(n.split("_")[1][2:])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  {name}")
