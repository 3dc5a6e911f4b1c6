import pytest

from foulkeshowe.cache import CACHE_ENV_VAR
from foulkeshowe.foulkes_map import left_factor, psi_composed, psi_fused, right_factor


@pytest.fixture(scope="session", autouse=True)
def _cache_in_tmpdir(tmp_path_factory):
    """Keep disk-cache writes out of the working tree during tests."""
    import os

    old = os.environ.get(CACHE_ENV_VAR)
    os.environ[CACHE_ENV_VAR] = str(tmp_path_factory.mktemp("fhcache"))
    yield
    if old is None:
        os.environ.pop(CACHE_ENV_VAR, None)
    else:
        os.environ[CACHE_ENV_VAR] = old


@pytest.fixture(scope="session")
def psi34_fused():
    return psi_fused(3, 4)


@pytest.fixture(scope="session")
def psi34_composed():
    return psi_composed(3, 4)


@pytest.fixture(scope="session")
def factors34():
    return left_factor(3, 4), right_factor(3, 4)
