import pytest

from weylgarnir.rootsys import subsystem_from_simples
from weylgarnir.specht import SystemPair
from weylgarnir.suites import group_for

_acceptance: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def G2():
    return group_for("G2")


@pytest.fixture(scope="session")
def A2():
    return group_for("A2")


@pytest.fixture(scope="session")
def example(G2):
    """The worked G2 configuration: J = {10,32}, J' = {11}, d = t1, J* = {10,21}."""
    phi = G2.phi
    pair = SystemPair.from_names(G2, ["10", "32"], ["11"])
    star = subsystem_from_simples(phi, [phi.parse_root("10"), phi.parse_root("21")])
    return pair, G2.parse_word("t1"), star


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    # one line per criterion; parametrized cases are folded together
    grouped: dict[str, list[tuple[str, str]]] = {}
    for name, outcome in _acceptance:
        base, _, param = name.partition("[")
        grouped.setdefault(base, []).append((param.rstrip("]"), outcome))
    terminalreporter.section("acceptance criteria")
    for base, cases in grouped.items():
        bad = [p or base for p, o in cases if o != "PASSED"]
        status = "FAIL" if bad else "PASS"
        params = [p for p, _ in cases if p]
        detail = f" [{', '.join(params)}]" if params else ""
        extra = f"  failing: {', '.join(bad)}" if bad else ""
        terminalreporter.write_line(f"{status}  {base}{detail}{extra}")
