from collections import Counter

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from combinatorics import Partition

# character recursions fill their caches on first use
settings.register_profile(
    "certificates",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("certificates")


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))

    # Assign each element to a random bin
    bin_assignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))

    # Bin sizes, largest first
    counts = Counter(bin_assignments)
    return Partition(tuple(sorted(counts.values(), reverse=True)))


@pytest.fixture(autouse=True)
def clean_cert_env(monkeypatch):
    """Runs every test against the documented defaults, whatever the shell exports."""
    for name in (
        "CERT_WORKERS",
        "CERT_SEARCH_BUDGET",
        "CERT_ORACLE_MAX_N",
        "CERT_MIS_MAX_N",
        "CERT_EIGEN_METHOD",
        "CERT_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
