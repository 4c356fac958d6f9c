import pytest
from hypothesis import settings

from fanochords.algebra import GF, PolynomialRing

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture
def F():
    return GF(32003)


@pytest.fixture
def zring(F):
    return PolynomialRing(("z00", "z01", "z02", "z10", "z11", "z12"), F)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                num = int(nodeid.split("test_criterion_")[1].split("_")[0])
                lines.append((num, status, nodeid.split("::")[1]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, status, name in sorted(lines):
            verdict = "PASS" if status == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {name}")
