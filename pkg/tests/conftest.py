import pytest

from regmaps.core.presets import preset
from regmaps.core.todd_coxeter import regular_table
from regmaps.services.census_service import CensusService


@pytest.fixture
def ea8_table():
    """The order-8 elementary abelian map: three commuting reflections."""
    return regular_table(preset("delta").with_relators("(r0 r1)^2", "(r1 r2)^2"))


@pytest.fixture
def dihedral_table():
    return regular_table(preset("dihedral", n=4))


@pytest.fixture(scope="session")
def small_census(tmp_path_factory):
    """A census through order 2^6, shared by the tests that only read it."""
    out = tmp_path_factory.mktemp("census")
    service = CensusService(out, workers=1)
    service.run(6)
    return out


@pytest.fixture(scope="session")
def census8(tmp_path_factory):
    """A census through order 2^8, the first order where both classification types occur."""
    out = tmp_path_factory.mktemp("census8")
    CensusService(out, workers=1).run(8)
    return out


@pytest.fixture(scope="session")
def census10(tmp_path_factory):
    out = tmp_path_factory.mktemp("census10")
    CensusService(out, workers=1).run(10)
    return out
