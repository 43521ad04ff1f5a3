import numpy as np
import pytest

from normcontrol import FunctionOnG, Group

SMALL_GROUPS = [
    Group((2,)),
    Group((3,)),
    Group((4,)),
    Group((8,)),
    Group((2, 2)),
    Group((3, 4)),
    Group((2, 2, 5)),
]


def random_function(group: Group, rng: np.random.Generator,
                    complex_valued: bool = True) -> FunctionOnG:
    vals = rng.standard_normal(group.size)
    if complex_valued:
        vals = vals + 1j * rng.standard_normal(group.size)
    return FunctionOnG(group, vals)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
