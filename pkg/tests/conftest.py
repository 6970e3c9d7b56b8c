import sys

import pytest

from egosim import kernels, load_dataset, load_edge_list


@pytest.fixture
def triangle():
    return load_edge_list("1 2\n2 3\n1 3\n")


@pytest.fixture
def star3():
    return load_edge_list("c a\nc b\nc d\n")


@pytest.fixture
def fig2_fragment():
    # node 4 with neighbours 1,2,3,5,6,7 and degrees matching the worked example
    return load_edge_list(
        "4 1\n4 2\n4 3\n4 5\n4 6\n4 7\n"
        "1 2\n7 8\n3 9\n3 10\n5 11\n5 12\n5 13\n6 14\n6 15\n6 16\n"
    )


@pytest.fixture(scope="session")
def karate():
    return load_dataset("karate")


@pytest.fixture(scope="session")
def a21():
    return load_dataset("a21-signatures")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
