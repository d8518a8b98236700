"""Shared pytest fixtures for mpalg tests."""

import pytest

from mpalg.core.multiset_algebra import canonicalize
from mpalg.suites.algebra import gamma_one, gamma_one_squared, rsk_example


@pytest.fixture
def gamma1():
    """The k = 2 diagram with edges (0,1), (1,0), (1,1)."""
    return gamma_one()


@pytest.fixture
def gamma1_squared():
    """Expected square of gamma1."""
    return gamma_one_squared()


@pytest.fixture
def gamma1_json():
    """gamma1 on the wire."""
    return '{"lambda": [2], "edges": [[[0], [1]], [[1], [0]], [[1], [1]]]}'


@pytest.fixture
def doubled():
    """The k = 2 diagram with the edge (1,1) twice."""
    return canonicalize((2,), [((1,), (1,)), ((1,), (1,))])


@pytest.fixture
def rsk_221():
    """(d, T, S) for the lambda = (2,2,1), n = 6 example."""
    return rsk_example()


@pytest.fixture
def small_lambdas():
    """Weight vectors small enough for exhaustive checks."""
    return [(1,), (2,), (1, 1)]


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keep user, repository and environment configuration out of tests."""
    monkeypatch.setenv("HOME", str(tmp_path / "home"))
    monkeypatch.setenv("MPALG_GIT_ROOT", str(tmp_path / "no-repo"))
    monkeypatch.delenv("MPA_THREADS", raising=False)


# Pytest markers
def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow running")
    config.addinivalue_line("markers", "integration: mark test as integration test")
