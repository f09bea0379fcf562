import pytest

from regionflip.catalog import bundled_diagrams
from regionflip.diagram import is_proper

HOPF_PD = "X(1,4,2,3) X(3,2,4,1)"
CURL_PD = "X(1,2,2,1)"


@pytest.fixture(scope="session")
def catalog():
    return bundled_diagrams()


@pytest.fixture(scope="session")
def proper_catalog(catalog):
    return {name: d for name, d in catalog.items() if is_proper(d)}


@pytest.fixture(scope="session")
def hopf(catalog):
    return catalog["hopf"]


@pytest.fixture(scope="session")
def trefoil(catalog):
    return catalog["trefoil"]


@pytest.fixture(scope="session")
def figure_eight(catalog):
    return catalog["figure_eight"]
