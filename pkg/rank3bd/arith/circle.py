# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""The circle group in additive exponent form: a + b*theta mod 1."""
import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CirclePoint:
    """The point exp(2*pi*i*(a + b*theta)) of the circle, stored as (a mod 1, b).

    Two points are equal iff both components are equal: b*theta mod 1 differs for distinct
    integers b because theta is irrational.
    """

    a: Fraction = Fraction(0)
    b: int = 0

    def __post_init__(self):
        a = Fraction(self.a)
        object.__setattr__(self, "a", a - math.floor(a))
        object.__setattr__(self, "b", int(self.b))

    def __add__(self, other):
        return CirclePoint(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return CirclePoint(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __str__(self):
        op = "+" if self.b >= 0 else "-"
        return f"{self.a}{op}{abs(self.b)}*theta"


def circle_add(p, q):
    """Group law of the circle, first component reduced into [0, 1)."""
    return p + q
