import pytest

from lamlat import EnumerationFilter, catalog, enumerate_completions, enumerate_posets


@pytest.fixture(scope="session")
def fixtures():
    return catalog()


@pytest.fixture(scope="session")
def small_completions():
    """Every completion of every directed poset with at most 4 elements."""
    out = []
    for p in enumerate_posets(EnumerationFilter(max_elements=4, require_directed=True)):
        out.extend(enumerate_completions(p))
    return out


def idx(instance, name):
    """Element index by display label."""
    return instance.labels.index(name)
