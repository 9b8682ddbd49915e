import pytest

from src.surfmap import OrientedMap, iter_maps
from src.permkit import Perm


def make_map(sigma: str, n: int) -> OrientedMap:
    return OrientedMap(n, Perm.parse(sigma, 2 * n)).validate()


@pytest.fixture(scope="session")
def example_map():
    """Two vertices, two edges, two faces on the sphere."""
    return make_map("(1)(2 3 4)", 2)


@pytest.fixture(scope="session")
def triangle():
    return make_map("(1 3)(2 5)(4 6)", 3)


@pytest.fixture(scope="session")
def single_edge():
    return make_map("(1)(2)", 1)


@pytest.fixture(scope="session")
def small_maps():
    """Every connected map with at most three edges."""
    return [M for n in (1, 2, 3) for M in iter_maps(n)]


@pytest.fixture(scope="session")
def maps_with_four_edges():
    return list(iter_maps(4))
