# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

import pytest

from rank3bd.bratteli import first_path
from rank3bd.errors import PreconditionError, TruncationError
from rank3bd.kgraph import (
    check_tower_properties,
    rank2_morphism,
    tower_coverings,
    tower_from_path,
    verify_covering,
)
from rank3bd.testing import load_example


@pytest.fixture(name="tower", scope="module")
def fixture_tower():
    return tower_from_path(load_example("example1"), levels=3, bound=(2, 2))


def test_shape(tower):
    assert tower.bound == (2, 2, 2)
    assert len(tower.graph) == 153
    assert [tower.weight(n) for n in (1, 2, 3)] == [1, 2, 4]
    small = tower_from_path(load_example("example1"), levels=3, bound=(1, 1))
    assert sum(len(small.vertices(n)) for n in (1, 2, 3)) == 7
    assert len(small.graph.vertices) == 7


def test_properties(tower):
    assert check_tower_properties(tower) == []
    for p in tower_coverings(tower):
        assert verify_covering(p) == []


def test_broken_connecting_edge(monkeypatch):
    tower = tower_from_path(load_example("example1"), levels=3, bound=(1, 1))
    top = tower.vertices(3)
    connecting_edge = tower.connecting_edge

    def misrouted(v):
        return connecting_edge(top[0] if v == top[1] else v)

    monkeypatch.setattr(tower, "connecting_edge", misrouted)
    report = check_tower_properties(tower)
    assert any(v.kind == "edge" and v.subject == str(top[1]) for v in report)
    undefined = [v for v in report if v.kind == "intertwining" and "undefined" in v.message]
    assert undefined
    assert str(top[1]) in [v.subject for v in undefined]


def test_xi_and_connecting_edges(tower):
    graph = tower.graph
    v = tower.vertices(3)[3]
    xi = tower.xi(v)
    assert graph.d(xi) == (0, 0, 2)
    assert graph.r(xi) == tower.vertices(1)[0] and graph.s(xi) == v

    e = tower.connecting_edge(v)
    assert graph.s(e) == v
    assert graph.r(e) == tower.vertices(2)[1] == tower.p_n(v)
    assert len(tower.connecting_edges(2)) == 4

    lam = rank2_morphism(tower.chain, tower.chain_vertex(3), 3, 1, 0)
    assert tower.p_1n(lam) == rank2_morphism(tower.chain, tower.chain_vertex(1), 0, 1, 0)
    assert tower.p_n(lam) == rank2_morphism(tower.chain, tower.chain_vertex(2), 1, 1, 0)


def test_errors(tower):
    with pytest.raises(TruncationError):
        tower.level_graph(0)
    with pytest.raises(PreconditionError):
        tower.p_n(tower.vertices(1)[0])
    with pytest.raises(PreconditionError):
        tower.connecting_edge(tower.vertices(1)[0])
    E = load_example("example3")
    with pytest.raises(PreconditionError):
        tower_from_path(E, levels=2)
    with pytest.raises(PreconditionError):
        tower_from_path(E)
    with pytest.raises(PreconditionError):
        tower_from_path(E, first_path(E, 2), bound=(1, 1, 1))


def test_tower_along_a_path():
    E = load_example("example3")
    tower = tower_from_path(E, first_path(E, 3), bound=(1, 1))
    assert [E.name(v) for v in tower.path] == ["t1", "t2", "t2@3"]
    assert check_tower_properties(tower) == []


if __name__ == "__main__":
    pytest.main([__file__])
