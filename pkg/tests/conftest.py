import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polelattice import boolean_lattice, diamond_m3, enumerate_lattices  # noqa: E402


@pytest.fixture(scope="session")
def b2():
    return boolean_lattice(2)


@pytest.fixture(scope="session")
def m3():
    return diamond_m3()


@pytest.fixture(scope="session")
def small_corpus():
    """Every lattice with at most five elements."""
    return [t for n in range(1, 6) for t in enumerate_lattices(n)]
