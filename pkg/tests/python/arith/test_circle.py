# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis.strategies import fractions, integers

from rank3bd.arith import CirclePoint, circle_add


def test_normalization():
    assert CirclePoint(Fraction(5, 4), 2) == CirclePoint(Fraction(1, 4), 2)
    assert CirclePoint(-1, 0).is_zero()
    assert CirclePoint(Fraction(-1, 4), 0).a == Fraction(3, 4)
    assert CirclePoint(0, 1) != CirclePoint(0, 2)


def test_group_law():
    x = CirclePoint(Fraction(3, 4), 1)
    y = CirclePoint(Fraction(1, 2), -3)
    assert circle_add(x, y) == CirclePoint(Fraction(1, 4), -2)
    assert -x == CirclePoint(Fraction(1, 4), -1)
    assert (x - x).is_zero()
    assert str(y) == "1/2-3*theta"


@given(a=fractions(), b=integers(-50, 50), c=fractions(), d=integers(-50, 50))
def test_abelian(a, b, c, d):
    x, y = CirclePoint(a, b), CirclePoint(c, d)
    assert x + y == y + x
    assert 0 <= (x + y).a < 1
    assert (x + y) - y == x


if __name__ == "__main__":
    pytest.main([__file__])
