# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Canonical forms for the morphisms of the rank-3 graph Λ_E of a weighted Bratteli diagram.

Every morphism factors uniquely as a rank-2 part in the cycle graph Λ_v at its range,
followed by a path of degree-e_3 edges climbing the diagram. It is therefore stored as

    (range vertex v, range index i, rank-2 degree (p, q), e_3 path α_1...α_r, source index j)

with r(α_1) = v, r(α_{t+1}) = s(α_t) and j a residue modulo the weight of the last source.
The indices satisfy j ≡ i + p + q (mod w(v)).
"""
import logging
from dataclasses import dataclass, field

from ..errors import PreconditionError, TruncationError
from . import degree as dg
from .truncated import TruncatedKGraph

logger = logging.getLogger("KGraph")  # pylint: disable=invalid-name


@dataclass(frozen=True, order=True)
class RankThreeMorphism:
    """A morphism of Λ_E in canonical form; validated on construction."""

    range_vertex: tuple
    range_index: int
    rank2_degree: tuple
    e3_path: tuple
    source_index: int
    diagram: object = field(compare=False, hash=False, repr=False)

    def __post_init__(self):
        E = self.diagram  # pylint: disable=invalid-name
        v, i = self.range_vertex, self.range_index
        if not 0 <= i < E.weight(v):
            raise PreconditionError(f"index {i} out of range for {E.name(v)}")
        current = v
        for edge in self.e3_path:
            if edge.range != current or not E.has_edge(edge.source, edge.range):
                raise PreconditionError(f"{edge} does not continue a path from {E.name(v)}")
            current = edge.source
        if not 0 <= self.source_index < E.weight(current):
            raise PreconditionError(f"index {self.source_index} out of range for {E.name(current)}")
        p, q = self.rank2_degree
        if p < 0 or q < 0:
            raise PreconditionError(f"negative degree {self.rank2_degree}")
        if (self.source_index - i - p - q) % E.weight(v) != 0:
            raise PreconditionError(
                f"source index {self.source_index} is not {i}+{p}+{q} mod {E.weight(v)}"
            )

    @property
    def degree(self):
        return self.rank2_degree + (len(self.e3_path),)

    @property
    def source_vertex(self):
        return self.e3_path[-1].source if self.e3_path else self.range_vertex

    @property
    def level(self):
        """Level of the range vertex."""
        return self.range_vertex.level

    def range(self):
        """The identity morphism at (v, i)."""
        return vertex(self.diagram, self.range_vertex, self.range_index)

    def source(self):
        """The identity morphism at the source."""
        return vertex(self.diagram, self.source_vertex, self.source_index)

    def is_vertex(self):
        return self.degree == (0, 0, 0)

    def __str__(self):
        E = self.diagram  # pylint: disable=invalid-name
        path = ".".join(f"{E.name(e.source)}" for e in self.e3_path)
        p, q = self.rank2_degree
        return f"({E.name(self.range_vertex)},{self.range_index})[{p},{q}|{path}]{self.source_index}"


def vertex(E, v, i):
    """The vertex (v, i) of Λ_E as an identity morphism."""
    return RankThreeMorphism(v, i % E.weight(v), (0, 0), (), i % E.weight(v), E)


def compose(lam, mu):
    """λμ in canonical form.

    The rank-2 part of μ sits at s(λ); pushing it down through the e_3-path of λ along the
    coverings keeps its degree and only reduces indices, so the composite has the range of λ,
    the summed rank-2 degree, the concatenated path and the source of μ.
    """
    if (lam.source_vertex, lam.source_index) != (mu.range_vertex, mu.range_index):
        raise PreconditionError(f"s({lam}) != r({mu})")
    return RankThreeMorphism(
        lam.range_vertex,
        lam.range_index,
        dg.add(lam.rank2_degree, mu.rank2_degree),
        lam.e3_path + mu.e3_path,
        mu.source_index,
        lam.diagram,
    )


def factorize(lam, m):
    """The unique (μ, ν) with λ = μν and d(μ) = m."""
    m = tuple(m)
    if len(m) != 3 or not dg.leq(m, lam.degree):
        raise PreconditionError(f"{m} is not below d(λ) = {lam.degree}")
    E = lam.diagram  # pylint: disable=invalid-name
    p, q = lam.rank2_degree
    m1, m2, m3 = m
    middle = lam.e3_path[m3 - 1].source if m3 else lam.range_vertex
    middle_index = (lam.source_index - (p - m1) - (q - m2)) % E.weight(middle)
    head = RankThreeMorphism(
        lam.range_vertex, lam.range_index, (m1, m2), lam.e3_path[:m3], middle_index, E
    )
    tail = RankThreeMorphism(
        middle, middle_index, (p - m1, q - m2), lam.e3_path[m3:], lam.source_index, E
    )
    return head, tail


def edge_e3(E, f, j):
    """e(w, f): the degree-e_3 edge from w = (s(f), j) to (r(f), j mod w(r(f)))."""
    return RankThreeMorphism(f.range, j % E.weight(f.range), (0, 0), (f,), j, E)


def rank2_morphism(E, v, i, p, q):
    """The unique morphism of Λ_v with range (v, i) and degree (p, q)."""
    return RankThreeMorphism(v, i, (p, q), (), (i + p + q) % E.weight(v), E)


def loop_morphisms(E, v, i):
    """(μ_i, ν_i): the loops at (v, i) of degrees (w(v), 0) and (w(v) - 1, 1)."""
    w = E.weight(v)
    return rank2_morphism(E, v, i, w, 0), rank2_morphism(E, v, i, w - 1, 1)


def upward_paths(E, v, length, last_level=None):
    """All E-paths α_1...α_r starting from v (r(α_1) = v) with r <= length."""
    paths = [()]
    frontier = [((), v)]
    for _ in range(length):
        grown = []
        for path, end in frontier:
            if last_level is not None and end.level >= last_level:
                continue
            if not E.has_level(end.level + 1):
                continue
            for edge in E.r_edges(end):
                grown.append((path + (edge,), edge.source))
        paths.extend(path for path, _ in grown)
        frontier = grown
    return paths


def enumerate_morphisms(E, levels, bound):
    """Every morphism of Λ_E between levels 1..levels with degree <= bound, canonical order."""
    bound = tuple(bound)
    result = []
    for n in range(1, levels + 1):
        for v in E.level(n):
            w = E.weight(v)
            paths = upward_paths(E, v, bound[2], last_level=levels)
            for i in range(w):
                for p, q in dg.below(bound[:2]):
                    for path in paths:
                        end = path[-1].source if path else v
                        for j in range((i + p + q) % w, E.weight(end), w):
                            result.append(RankThreeMorphism(v, i, (p, q), path, j, E))
    return sorted(result)


def rank_three_graph(E, levels, bound):
    """The truncation of Λ_E to levels 1..levels and degrees <= bound as a table-based graph."""
    bound = tuple(bound)
    if len(bound) != 3:
        raise PreconditionError(f"Λ_E has rank 3, got bound {bound}")
    for n in range(1, levels + 1):
        if not E.has_level(n):
            raise TruncationError(f"diagram has no level {n}")
    data = [(lam, lam.range(), lam.source(), lam.degree) for lam in enumerate_morphisms(E, levels, bound)]
    return TruncatedKGraph(3, bound, data, compose, name=f"Lambda_E[{levels}]")
