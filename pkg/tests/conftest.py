import pytest

from cyclokit import build_order_table, build_prime_table

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def table_1e6():
    return build_prime_table(10**6)


@pytest.fixture(scope="session")
def table_1e7():
    return build_prime_table(10**7)


@pytest.fixture(scope="session")
def orders_for(table_1e7):
    cache = {}

    def get(q):
        if q not in cache:
            cache[q] = build_order_table(q, table_1e7)
        return cache[q]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
