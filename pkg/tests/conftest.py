import pytest

from envelope_kit.instances import (
    b2_poset,
    chain_poset,
    k4_poset,
    v3_poset,
)
from envelope_kit.semilattice import validate_sus


@pytest.fixture
def v3():
    return validate_sus(v3_poset())


@pytest.fixture
def b2():
    return validate_sus(b2_poset())


@pytest.fixture
def k4():
    return validate_sus(k4_poset())


@pytest.fixture
def chain3():
    return validate_sus(chain_poset(3))
