import pytest


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """Shared catalog cache so enumeration work is done once per session."""
    return tmp_path_factory.mktemp("catalog-cache")
