import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from charclass import FieldSpec, Ideal, Ring

from helpers import PRIME


@pytest.fixture
def rng():
    return random.Random(20240501)


@pytest.fixture
def P2():
    return Ring(("x", "y", "z"), FieldSpec(PRIME))


@pytest.fixture
def P3():
    return Ring(("x", "y", "z", "w"), FieldSpec(PRIME))


@pytest.fixture
def twisted_cubic(P3):
    x, y, z, w = P3.gens()
    return Ideal(P3, [x * z - y * y, y * w - z * z, x * w - y * z])


@pytest.fixture
def nodal_cubic(P2):
    x, y, z = P2.gens()
    return x**3 + x * x * z - y * y * z
