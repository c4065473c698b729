import pathlib

import pytest
from hypothesis import strategies as st

from orthospace.core import space_from_edge_mask

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@st.composite
def spaces(draw, min_n=1, max_n=6):
    """Random small orthogonality spaces."""
    n = draw(st.integers(min_n, max_n))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << npairs) - 1))
    return space_from_edge_mask(n, mask)


@st.composite
def subset_masks(draw, n):
    return draw(st.integers(0, (1 << n) - 1))
