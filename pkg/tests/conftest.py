import pytest

import road_network

ACCEPTANCE_RESULTS = []


@pytest.fixture
def a_t():
    return road_network.A_T


@pytest.fixture
def a_t_prime():
    return road_network.A_T_PRIME


@pytest.fixture
def data_dir():
    return road_network.DATA


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
