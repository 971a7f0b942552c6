import numpy as np
import pytest

from tangentlie.algebra import from_brackets
from tangentlie.catalog import catalog_algebra, standard_algebras

CATALOG = list(standard_algebras())


@pytest.fixture(params=CATALOG)
def catalog_alg(request):
    return catalog_algebra(request.param)


@pytest.fixture
def so3():
    return catalog_algebra("so3")


@pytest.fixture
def sl2():
    return catalog_algebra("sl2")


@pytest.fixture
def heis():
    return catalog_algebra("heisenberg3")


@pytest.fixture
def broken():
    """[e1, e2] = e1, [e1, e3] = e2: antisymmetric but not Jacobi."""
    return from_brackets(3, [(0, 1, 0, 1.0), (0, 2, 1, 1.0)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
