import pytest

from grassmult import instance_from_entries

FIG1 = dict(n=21, d=9, w=(4, 6, 7, 13, 14, 17, 19, 20, 21), tau=(1, 2, 4, 7, 10, 12, 13, 15, 16))

# the multiset drawn in the light-and-shadow example (multiplicities spelled out)
FIG2A = [
    (2, 13), (3, 10), (3, 10), (3, 10), (3, 11), (3, 11), (4, 10), (4, 16),
    (5, 18), (5, 18), (5, 18), (6, 17), (6, 18), (7, 11), (7, 16), (7, 16),
    (7, 19), (8, 21), (8, 21), (8, 21), (8, 21), (9, 13), (9, 18),
]

# the family of the first figure, one step code per start point (1,9), (2,9), ..., (9,9);
# code 2 = North, 1 = East
FIG1_CODES = [
    "22221222112212221111",
    "2212",
    "2",
    "222",
    "222222221221211",
    "22222221",
    "222222",
    "22222222212",
    "22222222",
]


@pytest.fixture(scope="session")
def fig1():
    return instance_from_entries(**FIG1)


@pytest.fixture(scope="session")
def quadric():
    return instance_from_entries(4, 2, (2, 4), (1, 2))


@pytest.fixture(scope="session")
def quadric5():
    return instance_from_entries(5, 2, (3, 5), (1, 2))


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[2])):
        outcome, dur = _acceptance[name]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({dur:.2f}s)")
