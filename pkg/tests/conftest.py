import math

import numpy as np
import pytest
from hypothesis import strategies as st
from scipy.stats import unitary_group

from qfrac.quaternion import Quaternion, UnitQuaternion

DATA = __import__("pathlib").Path(__file__).parent / "data"


def unit_quaternions(min_vector=0.0):
    """Hypothesis strategy for unit quaternions, optionally with a vector part of at least ``min_vector``."""
    comp = st.floats(-1.0, 1.0, allow_nan=False)

    def build(c):
        n = math.sqrt(sum(x * x for x in c))
        return UnitQuaternion(*(x / n for x in c))

    return (st.tuples(comp, comp, comp, comp)
            .filter(lambda c: sum(x * x for x in c) > 1e-2)
            .map(build)
            .filter(lambda q: math.hypot(q.x, q.y, q.z) >= min_vector))


def random_unit(rng) -> UnitQuaternion:
    v = rng.normal(size=4)
    return UnitQuaternion(*(v / np.linalg.norm(v)))


def random_quaternion(rng) -> Quaternion:
    return Quaternion(*rng.normal(size=4))


def random_unitaries(count, seed):
    return unitary_group.rvs(2, size=count, random_state=seed).reshape(count, 2, 2)


def random_su2(count, seed):
    out = []
    for u in random_unitaries(count, seed):
        out.append(u / np.sqrt(np.linalg.det(u)))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
