# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

import pytest

from rank3bd.errors import PreconditionError
from rank3bd.ktheory import (
    KOneClass,
    basis_class,
    check_intertwiner,
    emit_nonneg_matrices,
    matrix_A,
    matrix_B,
    matrix_csv,
    matrix_T,
    push,
    push_A,
    push_B,
    theta_iso,
    vertex_class,
)
from rank3bd.testing import load_example, random_diagram, seeded_rng, with_seed


def as_lists(matrix):
    return [[int(x) for x in row] for row in matrix]


def test_example1_matrices():
    E = load_example("example1")
    assert as_lists(matrix_A(E, 1)) == [[2, 0], [0, 1]]
    assert as_lists(matrix_B(E, 1)) == [[1, -1], [0, 2]]
    assert as_lists(matrix_T(E, 3)) == [[0, 1], [1, 1]]
    v1 = E.vertex("v1")
    assert push_B(basis_class(E, v1, (0, 1), KOneClass), 2).coords == ((-1, 2),)
    assert push_B(basis_class(E, v1, (1, 0), KOneClass), 3).coords == ((1, 0),)


def test_example2_shapes():
    E = load_example("example2")
    assert matrix_A(E, 1).shape == (4, 2)
    assert matrix_B(E, 2).shape == (8, 4)
    x = vertex_class(E, E.vertex("r"))
    assert push_A(x, 3).coords == ((1, 0),) * 4


def test_push_errors():
    E = load_example("example1")
    x = vertex_class(E, E.level(2)[0])
    with pytest.raises(PreconditionError):
        push_A(x, 1)
    with pytest.raises(PreconditionError):
        push_B(x, 3)
    with pytest.raises(PreconditionError):
        push_A(basis_class(E, E.level(2)[0], (1, 0), KOneClass), 3)
    with pytest.raises(PreconditionError):
        theta_iso(x)
    assert push(x, 2) == x


def test_theta_iso():
    E = load_example("example3")
    t1 = E.vertex("t1")
    y = theta_iso(basis_class(E, t1, (2, 3), KOneClass))
    assert y.coords == ((3, 5), (0, 0))


@with_seed()
def test_intertwiner_on_random_diagrams():
    rng = seeded_rng()
    for _ in range(100):
        E = random_diagram(rng)
        assert check_intertwiner(E, E.num_levels) == (True, None)


@pytest.mark.parametrize("name", ["example1", "example2", "example3"])
def test_intertwiner_on_examples(name):
    assert check_intertwiner(load_example(name), 6) == (True, None)


@with_seed()
def test_theta_iso_is_natural():
    rng = seeded_rng()
    examples = [load_example(name) for name in ("example1", "example2", "example3")]
    for _ in range(1000):
        E = examples[int(rng.integers(0, 3))]
        n = int(rng.integers(1, 6))
        m = int(rng.integers(n, 7))
        coords = tuple(
            (int(rng.integers(-5, 6)), int(rng.integers(-5, 6))) for _ in E.level(n)
        )
        x = KOneClass(n, coords, E)
        assert theta_iso(push_B(x, m)) == push_A(theta_iso(x), m)


def test_nonneg_matrices():
    E = load_example("example2")
    matrices = emit_nonneg_matrices(E, 3)
    assert [m.shape for m in matrices] == [(2, 4), (4, 8)]
    for n, m in enumerate(matrices, start=1):
        assert (m == matrix_A(E, n).T).all()
        assert all(x >= 0 for x in m.flat)
    assert matrix_csv(matrices[0]) == "1,0,1,0\n0,1,0,1\n"
    assert emit_nonneg_matrices(E, 1) == []


if __name__ == "__main__":
    pytest.main([__file__])
