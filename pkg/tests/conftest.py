import pytest
from hypothesis import strategies as st

from gwaduflo.algebra import GwaSpec
from gwaduflo.config import load_config
from gwaduflo.exactnum import GaussianRational


@pytest.fixture(scope="session")
def weyl():
    return GwaSpec.from_roots([1], [[0]])


@pytest.fixture(scope="session")
def two_breaks():
    return GwaSpec.from_roots([1], [[3, 2, "-2/3", "2+1i", "4+1i"]])


@pytest.fixture(scope="session")
def rank2():
    return GwaSpec.from_roots([1, "3/2"], [[-2, 1], [-3, 3]])


@pytest.fixture(scope="session")
def sl2_chi3():
    return GwaSpec.from_roots([2], [[1, -3]])


@pytest.fixture(scope="session")
def bundled():
    names = ["weyl1", "two_breaks", "rank2", "sl2_chi3", "sl2_chi0"]
    return {n: load_config(n).spec for n in names}


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)
