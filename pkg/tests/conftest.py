import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from broadcast_liveness.generate import desk_corpus  # noqa: E402
from broadcast_liveness.model import net1, net2, net3, net4  # noqa: E402

Q0, QF = 0, 1


@pytest.fixture
def n1():
    return net1()


@pytest.fixture
def n2():
    return net2()


@pytest.fixture
def n3():
    return net3()


@pytest.fixture
def n4():
    return net4()


@pytest.fixture(scope="session")
def corpus():
    return desk_corpus(500, seed=2024)
