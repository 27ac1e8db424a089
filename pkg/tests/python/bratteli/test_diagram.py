# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

from concurrent.futures import ThreadPoolExecutor

import pytest

from rank3bd.bratteli import (
    Stationary,
    Vertex,
    WeightedBratteli,
    derived_F,
    dump_diagram,
    first_path,
    level_description,
    load_diagram,
    parse_diagram,
    path_count,
    restrict_to_path,
    validate,
)
from rank3bd.errors import ParseError, TruncationError
from rank3bd.testing import DATA_DIR, load_example, random_diagram, seeded_rng, with_seed


def names(E, n):
    return [E.name(v) for v in E.level(n)]


@pytest.mark.parametrize("name", ["example1", "example2", "example3"])
def test_examples_are_valid(name):
    E = load_diagram(DATA_DIR / "examples" / f"{name}.json")
    assert E.is_stationary
    assert validate(E) == []


def test_repeat_generation():
    E = load_example("example1")
    assert names(E, 3) == ["v2@3"]
    assert [E.weight(v) for n in range(1, 6) for v in E.level(n)] == [1, 2, 4, 8, 16]
    assert E.vertex("v2@4") == E.level(4)[0]
    (edge,) = E.edges_between(4)
    assert E.ratio(edge) == 2

    E = load_example("example3")
    assert names(E, 3) == ["t2@3", "b2@3"]
    assert [E.weight(v) for v in E.level(5)] == [2, 2]
    assert len(E.edges_between(4)) == 4


def test_branch_generation():
    E = load_example("example2")
    assert names(E, 3) == ["a@3.0", "b@3.0", "a@3.1", "b@3.1"]
    assert [(E.name(e.source), E.name(e.range)) for e in E.edges_between(2)] == [
        ("a@3.0", "a"),
        ("b@3.0", "a"),
        ("a@3.1", "b"),
        ("b@3.1", "b"),
    ]
    assert names(E, 4)[:4] == ["a@4.0", "b@4.0", "a@4.1", "b@4.1"]
    assert len(E.level(4)) == 8
    assert {E.name(e.range) for e in E.s_edges(E.vertex("b@4.3"))} == {"b@3.1"}


def test_generation_keeps_the_prefix_frozen():
    # pylint: disable=protected-access
    E = load_example("example2")
    prefix = dict(E._levels)
    lookup = dict(E._lookup)
    assert E.vertex("a@5.2") == Vertex(5, 4)
    assert len(E.level(6)) == 32
    assert E._levels == prefix and E._lookup == lookup
    assert E.num_levels == 2
    for bad in ["a@1.0", "a@x", "zzz", "a@5.99"]:
        with pytest.raises(KeyError):
            E.vertex(bad)


@pytest.mark.parametrize("name", ["example1", "example2", "example3"])
def test_concurrent_generation(name):
    def snapshot(E):
        return [(names(E, n), [E.weight(v) for v in E.level(n)]) for n in range(1, 8)]

    expected = snapshot(load_example(name))
    shared = load_example(name)
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: snapshot(shared), range(16)))
    assert all(result == expected for result in results)


def test_queries():
    E = load_example("example3")
    t1, b1 = E.level(1)
    t2, b2 = E.level(2)
    assert [e.source for e in E.r_edges(t1)] == [t2, b2]
    assert [e.range for e in E.s_edges(t2)] == [t1, b1]
    assert E.s_edges(t1) == ()
    assert E.has_edge(b2, t1)
    assert path_count(E, E.vertex("t2@3")) == 4
    assert level_description(load_example("example1"), 3) == ["v2@3: (1/4)Z+θZ"]
    assert level_description(E, 1) == ["t1: (1/2)Z+θZ", "b1: (1/2)Z+θZ"]


def test_derived_multiplicity():
    E = load_example("example1")
    F = derived_F(E)
    (edge,) = F.edges_between(1)
    assert F.multiplicity(edge) == 2
    assert F.name(F.level(2)[0]) == "v2"
    assert F.weighted is E


def test_truncation():
    E = WeightedBratteli([[("a", 1)], [("b", 2)]], [("b", "a")])
    assert not E.is_stationary
    assert E.has_level(2) and not E.has_level(3)
    with pytest.raises(TruncationError):
        E.level(3)
    with pytest.raises(TruncationError):
        E.level(0)
    with pytest.raises(KeyError):
        E.vertex("c")


def test_paths():
    E = load_example("example2")
    path = first_path(E, 3)
    assert [E.name(v) for v in path] == ["r", "a", "a@3.0"]
    chain = restrict_to_path(E, path)
    assert [chain.name(chain.level(n)[0]) for n in (1, 2, 3)] == ["r", "a", "a@3.0"]
    assert validate(chain) == []

    E = load_example("example3")
    chain = restrict_to_path(E, [E.vertex("b1"), E.vertex("t2"), E.vertex("b2@3")])
    assert chain.num_levels == 3 and len(chain.edges_between(2)) == 1
    with pytest.raises(TruncationError):
        restrict_to_path(E, [E.vertex("t2"), E.vertex("b2@3")])
    with pytest.raises(TruncationError):
        restrict_to_path(E, [E.vertex("t1"), E.vertex("b2@3")])


@pytest.mark.parametrize(
    "levels, edges, stationary, kind",
    [
        ([[("a", 1)], [("b", 1)]], [("b", "a"), ("b", "a")], None, "singly-connected"),
        ([[("a", 2)], [("b", 3)]], [("b", "a")], None, "divisibility"),
        ([[("a", 1), ("c", 1)], [("b", 1)]], [("b", "a")], None, "emission"),
        ([[("a", 1)], [("b", 1), ("d", 1)]], [("b", "a")], None, "reception"),
        ([[("a", 0)]], [], None, "weight"),
        (
            [[("a", 1)], [("b", 1), ("c", 1)]],
            [("b", "a"), ("c", "a")],
            Stationary(1, 1),
            "stationary",
        ),
        (
            [[("a", 2)], [("b", 3)]],
            [("b", "a")],
            Stationary(1, 1),
            "stationary",
        ),
    ],
)
def test_validate_reports(levels, edges, stationary, kind):
    E = WeightedBratteli(levels, edges, stationary)
    report = validate(E)
    assert kind in {violation.kind for violation in report}


def test_validate_names_offender():
    E = WeightedBratteli([[("a", 2)], [("b", 3)]], [("b", "a")])
    (violation,) = validate(E)
    assert violation.subject == "b->a"
    assert "does not divide" in violation.message


@with_seed()
def test_random_diagrams_are_valid():
    rng = seeded_rng()
    for _ in range(50):
        E = random_diagram(rng)
        assert validate(E) == []


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"levels": []}',
        '{"levels": [], "edges": []}',
        '{"levels": [[{"name": "a"}]], "edges": []}',
        '{"levels": [[{"name": "a", "weight": 1.5}]], "edges": []}',
        '{"levels": [[{"name": "a", "weight": 1}], [{"name": "a", "weight": 1}]], "edges": []}',
        '{"levels": [[{"name": "a", "weight": 1}]], "edges": [{"from": "b", "to": "a"}]}',
        '{"levels": [[{"name": "a", "weight": 1}], [{"name": "b", "weight": 1}]],'
        ' "edges": [{"from": "a", "to": "b"}]}',
        '{"levels": [[]], "edges": []}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_diagram(text)


def test_dump_and_parse():
    E = load_example("example3")
    text = dump_diagram(E)
    F = parse_diagram(text)
    assert dump_diagram(F) == text
    assert F.stationary == E.stationary
    assert names(F, 3) == names(E, 3)


if __name__ == "__main__":
    pytest.main([__file__])
