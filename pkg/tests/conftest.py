import pytest

from cgobstruct import build_family, genus_lower_bound


@pytest.fixture(scope="session")
def flagship():
    return build_family(83, 103, 17, 11, 13)


@pytest.fixture(scope="session")
def flagship_report(flagship):
    # shared by non-timing tests; acceptance tests run their own scans
    return genus_lower_bound(flagship, g_max=2, threads=4)
