import itertools

import pytest
from hypothesis import strategies as hst

from permclass.perm import Permutation, standardize


def brute_contains(haystack, pattern):
    """Containment by trying every subsequence; independent of the backtracking search."""
    k = len(pattern)
    pattern = tuple(pattern)
    return any(tuple(standardize([haystack[i] for i in idx])) == pattern
               for idx in itertools.combinations(range(len(haystack)), k))


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@hst.composite
def permutations(draw, min_size=1, max_size=9):
    n = draw(hst.integers(min_size, max_size))
    return Permutation(draw(hst.permutations(range(1, n + 1))))


@pytest.fixture(scope="session")
def perms_upto_6():
    return [p for n in range(1, 7) for p in all_perms(n)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
