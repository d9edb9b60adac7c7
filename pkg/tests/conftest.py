import hypothesis.strategies as st
import pytest

from ostrowski.quadrature import Grid

dyadics = st.integers(0, 256).map(lambda k: k / 8)
signed_dyadics = st.integers(-64, 64).map(lambda k: k / 8)
pairs = st.tuples(dyadics, dyadics)


@pytest.fixture(scope="session")
def sweep21():
    return [round(-1 + 0.1 * k, 10) for k in range(21)]


@pytest.fixture(scope="session")
def grid5():
    return Grid.uniform(257, breakpoints=[-1, -0.5, 0, 0.5, 1])
