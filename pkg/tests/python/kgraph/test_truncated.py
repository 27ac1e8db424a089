# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

import itertools

import pytest

from rank3bd.errors import ParseError, PreconditionError, TruncationError
from rank3bd.kgraph import (
    TruncatedKGraph,
    boundary_paths,
    build_cycle,
    build_from_graph,
    build_torus,
    cartesian_product,
    min_common_ext,
    rank_three_graph,
    skew_product,
)
from rank3bd.kgraph import degree as dg
from rank3bd.testing import (
    brute_force_boundary_paths,
    brute_force_min_common_ext,
    brute_force_paths,
    load_example,
)


def source_graph():
    """A 2-graph with sources: one edge path category times T_1."""
    paths = build_from_graph(["x", "y"], [("y", "x")], (1,))
    return cartesian_product(paths, build_torus(1, (1,)))


BUILDERS = {
    "torus2": lambda: build_torus(2, (2, 2)),
    "torus3": lambda: build_torus(3, (2, 2, 2)),
    "cycle3": lambda: build_cycle(3, (2, 2)),
    "skew": lambda: skew_product(build_torus(2, (2, 2)), lambda m: m[0], 2),
    "paths": lambda: build_from_graph(["x", "y"], [("y", "x"), ("x", "y"), ("y", "y")], (2,)),
    "product": source_graph,
    "lambda_e": lambda: rank_three_graph(load_example("example1"), 2, (1, 1, 1)),
}


def test_parse_degree():
    assert dg.parse_degree("2,2,2") == (2, 2, 2)
    with pytest.raises(ParseError):
        dg.parse_degree("2,x")
    with pytest.raises(ParseError):
        dg.parse_degree("1,-1")


def test_degree_order():
    assert dg.join((1, 0, 2), (0, 3, 1)) == (1, 3, 2)
    assert dg.leq((1, 0), (1, 1)) and not dg.leq((2, 0), (1, 1))
    assert dg.below((1, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert dg.unit(3, 2) == (0, 0, 1)


def test_torus_and_cycle_sizes():
    assert len(build_torus(2, (2, 2))) == 9
    cycle = build_cycle(2, (1, 1))
    assert len(cycle) == 8
    assert len(cycle.vertices) == 2
    assert len(cycle.pairs()) == 18


def test_cycle_edges():
    cycle = build_cycle(3, (1, 1))
    for i in range(2):
        for edge in cycle.edges(i):
            origin, g = cycle.r(edge)
            assert cycle.s(edge) == (origin, (g + 1) % 3)


def test_from_graph():
    graph = build_from_graph(["x", "y"], [("y", "x")], (2,))
    assert len(graph) == 3
    assert boundary_paths(graph, ("x", ()), (2,)) == [("x", (0,))]
    assert boundary_paths(graph, ("y", ()), (2,)) == [("y", ())]


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_paths_match_oracle(name):
    graph = BUILDERS[name]()
    for v in graph.vertices:
        for n in dg.below(graph.bound):
            assert set(graph.with_range(v, n)) == brute_force_paths(graph, v, n)


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_boundary_paths_match_oracle(name):
    graph = BUILDERS[name]()
    for v in graph.vertices:
        for n in dg.below(graph.bound):
            assert set(boundary_paths(graph, v, n)) == brute_force_boundary_paths(graph, v, n)


@pytest.mark.parametrize("name", ["torus2", "cycle3", "skew", "paths", "product", "lambda_e"])
def test_min_common_ext_match_oracle(name):
    graph = BUILDERS[name]()
    for lam, mu in itertools.product(graph, graph):
        if graph.r(lam) != graph.r(mu):
            continue
        if not dg.leq(dg.join(graph.d(lam), graph.d(mu)), graph.bound):
            continue
        assert set(min_common_ext(graph, lam, mu)) == brute_force_min_common_ext(graph, lam, mu)


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_factorisation_and_associativity(name):
    graph = BUILDERS[name]()
    for lam in graph:
        for m in dg.below(graph.d(lam)):
            head, tail = graph.factorize(lam, m)
            assert graph.d(head) == m
            assert graph.compose(head, tail) == lam
    for lam, mu in graph.pairs():
        for nu in graph.with_range(graph.s(mu)):
            lam_mu = graph.compose(lam, mu)
            if not graph.composable(lam_mu, nu):
                continue
            assert graph.compose(lam_mu, nu) == graph.compose(lam, graph.compose(mu, nu))


def test_min_common_ext_in_torus_is_unique():
    graph = build_torus(2, (2, 2))
    assert min_common_ext(graph, (1, 0), (0, 1)) == [((0, 1), (1, 0))]
    assert min_common_ext(graph, (1, 0), (1, 0)) == [((0, 0), (0, 0))]


def test_errors():
    graph = build_torus(2, (1, 1))
    with pytest.raises(TruncationError):
        graph.compose((1, 1), (1, 0))
    with pytest.raises(TruncationError):
        graph.morphism((5, 5))
    with pytest.raises(PreconditionError):
        graph.factorize((1, 0), (0, 1))
    with pytest.raises(TruncationError):
        boundary_paths(graph, (0, 0), (2, 2))
    with pytest.raises(PreconditionError):
        build_torus(0, ())
    with pytest.raises(PreconditionError):
        skew_product(graph, lambda m: 1, 2)

    cycle = build_cycle(2, (1, 1))
    with pytest.raises(PreconditionError):
        cycle.compose(((1, 0), 0), ((1, 0), 0))
    with pytest.raises(PreconditionError):
        min_common_ext(cycle, ((1, 0), 0), ((1, 0), 1))


def test_rejects_non_kgraph_data():
    origin = (0, 0)
    data = [(origin, origin, origin, (0, 0)), ("a", origin, origin, (1, 0))]

    def compose(x, y):
        if x == origin:
            return y
        return x if y == origin else "aa"

    with pytest.raises(ValueError):
        # a composed with a has degree (2, 0) but is missing
        TruncatedKGraph(2, (2, 0), data, compose)
    with pytest.raises(ValueError):
        TruncatedKGraph(2, (1, 0), data + data[1:], lambda x, y: x)
    with pytest.raises(PreconditionError):
        TruncatedKGraph(1, (1, 0), data, lambda x, y: x)


def test_fingerprint_is_stable():
    assert build_cycle(3, (1, 1)).fingerprint() == build_cycle(3, (1, 1)).fingerprint()
    assert build_cycle(3, (1, 1)).fingerprint() != build_cycle(2, (1, 1)).fingerprint()


if __name__ == "__main__":
    pytest.main([__file__])
