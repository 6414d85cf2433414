import pytest

from powermatch.groups.constructors import (
    direct_product,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
    make_symmetric,
)


@pytest.fixture(scope="session")
def c4():
    return make_cyclic(4)


@pytest.fixture(scope="session")
def c6():
    return make_cyclic(6)


@pytest.fixture(scope="session")
def klein():
    return make_elementary_abelian_2(2)


@pytest.fixture(scope="session")
def q8():
    return make_dicyclic(2)


@pytest.fixture(scope="session")
def d4():
    return make_dihedral(4)


@pytest.fixture(scope="session")
def s3():
    return make_symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return make_symmetric(4)


@pytest.fixture(scope="session")
def c2xc4():
    return direct_product(make_cyclic(2), make_cyclic(4))


@pytest.fixture
def data_dir(tmp_path, monkeypatch):
    """Runs the test inside a scratch directory so relative DATA_DIR writes stay there."""

    monkeypatch.chdir(tmp_path)
    return tmp_path
