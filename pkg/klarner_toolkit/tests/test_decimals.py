from fractions import Fraction

import pytest

from klarner.decimals import ceil_decimal, floor_decimal, floor_root, integer_root, parse_decimal
from klarner.errors import BoundError


def test_directed_rounding():
    assert floor_decimal(Fraction(2, 3), 4) == "0.6666"
    assert ceil_decimal(Fraction(2, 3), 4) == "0.6667"
    assert floor_decimal(4, 4) == "4.0000"
    assert ceil_decimal(4, 4) == "4.0000"
    assert floor_decimal(Fraction(-1, 3), 2) == "-0.34"
    assert floor_decimal(Fraction(7, 2), 0) == "3"


def test_parse_decimal():
    assert parse_decimal("0.24307") == Fraction(24307, 100000)
    with pytest.raises(BoundError):
        parse_decimal("1.2.3")


def test_integer_root():
    assert integer_root(0, 3) == 0
    assert integer_root(26, 3) == 2
    assert integer_root(27, 3) == 3
    assert integer_root(10 ** 40, 40) == 10
    with pytest.raises(BoundError):
        integer_root(-1, 2)


def test_floor_root():
    assert floor_root(2, 2, 4) == "1.4142"
    assert floor_root(48, 5, 4) == "2.1689"
    assert floor_root(Fraction(1, 4), 2, 3) == "0.500"
