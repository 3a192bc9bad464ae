import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=100)
settings.load_profile("suite")

from trigrade import family_tables, parse_family


@pytest.fixture(scope="session")
def fixture_sets():
    """One representative table set per builtin family."""
    specs = ("k3-elliptic:r=2", "k3-finite:g=3", "k3-typeII:r=2", "k3-typeIII:k=2")
    return {spec: family_tables(parse_family(spec)) for spec in specs}
