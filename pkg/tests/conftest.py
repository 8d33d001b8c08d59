from collections import Counter
from itertools import combinations

import pytest

from diagqsym import bicomp
from diagqsym.bicomp import parse


def brute_quasi_shuffles(a, b):
    """Quasi-shuffles via pairs of increasing maps into [m] whose images cover [m]."""
    out = Counter()
    k, l = len(a), len(b)
    for m in range(max(k, l), k + l + 1):
        for fa in combinations(range(m), k):
            for fb in combinations(range(m), l):
                if set(fa) | set(fb) != set(range(m)):
                    continue
                parts = [(0, 0)] * m
                for pos, part in zip(fa, a):
                    parts[pos] = bicomp.vec_add(parts[pos], part)
                for pos, part in zip(fb, b):
                    parts[pos] = bicomp.vec_add(parts[pos], part)
                out[tuple(parts)] += 1
    return out


def all_bicomps(total):
    out = []
    for s in range(total + 1):
        for d1 in range(s + 1):
            out.extend(bicomp.enumerate_bicompositions((d1, s - d1)))
    return out


@pytest.fixture
def P():
    return parse


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
