import hypothesis.strategies as st
import pytest
from hypothesis import settings

from twingroups.words import GroupContext

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def words(draw, n=None, max_len=10):
    """(n, word) pairs; n is drawn from 2..7 unless fixed."""
    if n is None:
        n = draw(st.integers(2, 7))
    w = draw(st.lists(st.integers(1, n - 1), max_size=max_len))
    return n, tuple(w)


@pytest.fixture(params=[2, 3, 4, 5, 6])
def ctx(request):
    return GroupContext(request.param)
