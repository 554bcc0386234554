"""Session fixtures."""

import pytest

from tests.graphs import corpus


@pytest.fixture(scope="session")
def small_corpus() -> tuple[str, ...]:
    """Connected graphs on 3..8 vertices."""
    return tuple(s for n in range(3, 9) for s in corpus(n))
