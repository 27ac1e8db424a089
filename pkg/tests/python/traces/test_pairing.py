# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pytest

from rank3bd.arith import ThetaReal, parse_theta
from rank3bd.ktheory import KZeroClass, basis_class, push_A, unit_class, vertex_class, zero_class
from rank3bd.testing import load_example, seeded_rng, with_seed
from rank3bd.traces import GraphTrace, k0_pairing, k0_positive_by_trace, solve_traces

THETA = parse_theta("cf:0,(2)")


@pytest.fixture(name="example1")
def fixture_example1():
    return load_example("example1")


def test_basic_pairings(example1):
    h = solve_traces(example1, 3).point()
    v1, v2 = example1.vertex("v1"), example1.vertex("v2")
    assert k0_pairing(h, vertex_class(example1, v2)) == ThetaReal(Fraction(1, 2), 0)
    assert k0_pairing(h, basis_class(example1, v1, (0, 1))) == ThetaReal(0, 1)
    assert k0_pairing(h, unit_class(example1, 3)) == ThetaReal(1, 0)


@with_seed()
@pytest.mark.parametrize("name", ["example1", "example2", "example3"])
def test_pairing_is_level_consistent(name):
    rng = seeded_rng()
    E = load_example(name)
    space = solve_traces(E, 5)
    h = space.point([Fraction(int(rng.integers(0, 5)), 64) for _ in range(space.dimension)])
    for _ in range(1000):
        n = int(rng.integers(1, 5))
        coords = tuple((int(rng.integers(-6, 7)), int(rng.integers(-6, 7))) for _ in E.level(n))
        x = KZeroClass(n, coords, E)
        m = int(rng.integers(n, 6))
        assert k0_pairing(h, push_A(x, m)) == k0_pairing(h, x)


def test_positive_by_trace(example1):
    h = solve_traces(example1, 2).point()
    v1 = example1.vertex("v1")
    assert k0_positive_by_trace(basis_class(example1, v1, (1, -1)), h, THETA) is True
    assert k0_positive_by_trace(basis_class(example1, v1, (0, -1)), h, THETA) is False
    assert k0_positive_by_trace(zero_class(example1, 1), h, THETA) is None
    degenerate = GraphTrace("F", {v1: 0})
    assert k0_positive_by_trace(basis_class(example1, v1, (1, 0)), degenerate, THETA) is None


if __name__ == "__main__":
    pytest.main([__file__])
