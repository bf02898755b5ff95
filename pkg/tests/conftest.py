import itertools
import sys
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twochains.poset import Poset, poset_from_covers, random_poset

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

words = st.text(alphabet="01", max_size=12)


@st.composite
def posets(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from((0.1, 0.2, 0.3, 0.5, 0.7)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_poset(n, p, random.Random(seed))


def one_indexed(n, pairs):
    return poset_from_covers(n, [(i - 1, j - 1) for i, j in pairs])


def relation(p: Poset) -> set:
    return {(i, j) for i in range(p.n) for j in range(p.n) if p.less(i, j)}


def brute_is_chain(p, elems):
    return all(p.comparable(x, y) for x, y in itertools.combinations(elems, 2))


def brute_linear_extensions(p):
    rel = relation(p)
    count = 0
    for perm in itertools.permutations(range(p.n)):
        pos = {x: k for k, x in enumerate(perm)}
        count += all(pos[i] < pos[j] for i, j in rel)
    return count


@pytest.fixture(scope="session")
def two_chains_by_size():
    from twochains.bichain import enumerate_two_chains

    return {n: enumerate_two_chains(n) for n in range(2, 11)}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "SUMMARY", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
