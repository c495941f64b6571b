import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def brute_partitions(n, cap=None):
    """All weakly decreasing tuples summing to n (independent of the library)."""
    cap = n if cap is None else cap
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, cap), 0, -1):
        out += [(first,) + rest for rest in brute_partitions(n - first, first)]
    return out


def brute_conjugate(parts):
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0])) if parts else ()


def hook_dim(parts):
    """f^lambda from the hook length formula."""
    from math import factorial
    conj = brute_conjugate(parts)
    prod = 1
    for i, row in enumerate(parts):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(parts)) // prod


def class_counts(n):
    """(|E_n|, |F_n|) by pairing partitions with their conjugates."""
    ps = brute_partitions(n)
    selfc = sum(1 for p in ps if brute_conjugate(p) == p)
    return (len(ps) - selfc) // 2, selfc


@st.composite
def partition_strategy(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(brute_partitions(n)))


@st.composite
def permutation_strategy(draw, n):
    return tuple(draw(st.permutations(range(n))))


@pytest.fixture
def report(capsys):
    """Print a line straight to the terminal, bypassing capture."""
    def emit(line):
        with capsys.disabled():
            print(line)
    return emit
