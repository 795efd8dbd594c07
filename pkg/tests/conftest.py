import pytest

from zerosum.group import GroupSpec


@pytest.fixture
def c5():
    return GroupSpec([5])


@pytest.fixture
def c2x4():
    return GroupSpec([2, 4])


def mask(*indices: int) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out
