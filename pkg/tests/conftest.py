import pytest

from spectramark.corpus import er_corpus


@pytest.fixture(scope="session")
def corpus50():
    """50 seeded connected simple-spectrum graphs, N in [4, 20], p = 0.3."""
    return er_corpus(50, 4, 20, 0.3, seed=20140214, simple_only=True)


@pytest.fixture(scope="session")
def corpus200():
    """200 seeded connected graphs, N in [4, 20], p = 0.3."""
    return er_corpus(200, 4, 20, 0.3, seed=20151208)
