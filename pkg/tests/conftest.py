import pytest

from patternfree.graphs import enumerate_nonisomorphic_graphs

_CACHE: dict[int, list] = {}


def graphs_of_order(n: int) -> list:
    if n not in _CACHE:
        _CACHE[n] = list(enumerate_nonisomorphic_graphs(n))
    return _CACHE[n]


@pytest.fixture(scope="session")
def graphs_up_to_6():
    return [g for n in range(7) for g in graphs_of_order(n)]


@pytest.fixture(scope="session")
def graphs_up_to_5():
    return [g for n in range(6) for g in graphs_of_order(n)]


@pytest.fixture(scope="session")
def graphs_order_7():
    return graphs_of_order(7)
