# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pytest

from rank3bd.errors import PreconditionError
from rank3bd.kgraph import rank_three_graph, vertex
from rank3bd.testing import load_example
from rank3bd.traces import (
    GraphTrace,
    check_F_trace,
    check_graph_trace,
    collection_of,
    compatibility_check,
    glue,
    lift_trace,
    restrict_trace,
    solve_traces,
    zero_set,
)


@pytest.mark.parametrize("name", ["example1", "example2", "example3"])
def test_lift_is_a_graph_trace(name):
    E = load_example(name)
    h = solve_traces(E, 3).point()
    g = lift_trace(h, E)
    assert g.carrier == "Lambda" and g.normalization == "unit"
    assert check_graph_trace(g, rank_three_graph(E, 3, (1, 1, 1))) == (True, None)
    assert restrict_trace(g).values == h.values
    assert glue(collection_of(g), E).values == g.values
    assert compatibility_check(collection_of(g), E, 3)


def test_example1_values():
    E = load_example("example1")
    g = lift_trace(solve_traces(E, 3).point(), E)
    v2 = E.vertex("v2@3")
    assert [g(vertex(E, v2, j)) for j in range(4)] == [Fraction(1, 4)] * 4
    with pytest.raises(PreconditionError):
        g(vertex(E, E.vertex("v2@4"), 0))


def test_broken_traces():
    E = load_example("example1")
    v1, v2 = E.vertex("v1"), E.vertex("v2")
    h = GraphTrace("F", {v1: 1, v2: 1})
    assert check_F_trace(h, E) == (False, v1)
    with pytest.raises(PreconditionError):
        lift_trace(h, E)

    graph = rank_three_graph(E, 2, (1, 1, 1))
    g = GraphTrace("Lambda", {v: 1 for v in graph.vertices})
    ok, (where, i) = check_graph_trace(g, graph)
    assert not ok and where == vertex(E, v1, 0) and i == 2


def test_compatibility_failures():
    E = load_example("example1")
    g = lift_trace(solve_traces(E, 3).point(), E)
    collection = collection_of(g)
    top = E.vertex("v2@3")
    collection[top][1] = Fraction(1, 2)
    assert not compatibility_check(collection, E, 3)

    collection = collection_of(g)
    collection[E.vertex("v1")][0] = Fraction(2)
    assert not compatibility_check(collection, E, 3)


def test_sign_checks():
    E = load_example("example3")
    h = solve_traces(E, 2).point()
    assert h.is_nonnegative()
    g = GraphTrace("F", {E.vertex("t1"): 0, E.vertex("b1"): 1})
    assert g.is_nonnegative() and not g.is_faithful()


def test_zero_set():
    E = load_example("example2")
    names = {"a@3.0": "1/2", "b@3.0": "1/2", "a@3.1": 0, "b@3.1": 0}
    fixed = {E.vertex(name): Fraction(value) for name, value in names.items()}
    space = solve_traces(E, 3, fixed=fixed)
    assert space.unique
    g = lift_trace(space.point(), E)
    graph = rank_three_graph(E, 3, (1, 1, 1))
    H, hereditary, saturated = zero_set(g, graph)
    assert H == {vertex(E, E.vertex(name), 0) for name in ("b", "a@3.1", "b@3.1")}
    assert hereditary and saturated


def test_zero_set_failures():
    E = load_example("example2")
    graph = rank_three_graph(E, 3, (1, 1, 1))
    b = vertex(E, E.vertex("b"), 0)
    g = GraphTrace("Lambda", {v: 0 if v == b else 1 for v in graph.vertices})
    _, hereditary, saturated = zero_set(g, graph)
    assert not hereditary and saturated

    top = {vertex(E, E.vertex(name), 0) for name in ("a@3.0", "b@3.0")}
    g = GraphTrace("Lambda", {v: 0 if v in top else 1 for v in graph.vertices})
    _, hereditary, saturated = zero_set(g, graph)
    assert hereditary and not saturated


if __name__ == "__main__":
    pytest.main([__file__])
