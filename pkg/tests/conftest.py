import pytest

from permratio.enumeration import enumerate_trees
from permratio.families import Broom, Path, Star, build
from permratio.graph import Graph


def path(n):
    return build(Path(n))


def star(n):
    return build(Star(n))


def broom(n, k):
    return build(Broom(n, k))


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture(scope="session")
def tree_corpus():
    """All 95 non-isomorphic trees with 1 <= n <= 9."""
    return [t for n in range(1, 10) for t in enumerate_trees(n)]
