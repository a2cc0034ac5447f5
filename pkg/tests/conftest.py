import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from braidband.braid_core import BraidWord  # noqa: E402


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_length=10):
    n = draw(st.integers(min_strands, max_strands))
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_length,
        )
    )
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, max_strands=5, max_length=8):
    a = draw(braid_words(max_strands=max_strands, max_length=max_length))
    n = a.strands
    letters = draw(
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_length)
    )
    return a, BraidWord(n, tuple(letters))


@pytest.fixture
def pierced_conjugator():
    return BraidWord(4, (-3, 2))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
