from fractions import Fraction

import pytest

from e2qes.recurrence import RecurrenceSpec, Sector


@pytest.fixture
def sine7():
    return RecurrenceSpec(7, Sector.SINE)


@pytest.fixture
def cosine5():
    return RecurrenceSpec(5, Sector.COSINE)


def frac(p, q=1):
    return Fraction(p, q)
