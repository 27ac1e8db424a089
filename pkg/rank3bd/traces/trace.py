# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Graph traces on Λ_E and on the derived multiplicity diagram F.

A graph trace on F is a function h on the vertices with h(v) = Σ_{e ∈ vE^1} l(e) h(s(e)). A
graph trace on a truncation of Λ_E is a function g on its vertices with
g(v) = Σ_{λ ∈ vΛ^{e_i}} g(s(λ)) for every i with vΛ^{e_i} nonempty. The two correspond
through g((v, j)) = h(v).
"""
# pylint: disable=invalid-name
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PreconditionError
from ..kgraph import degree as dg
from ..kgraph import vertex as lambda_vertex

logger = logging.getLogger("Traces")  # pylint: disable=invalid-name


@dataclass
class GraphTrace:
    """Nonnegative rational values on the vertices of a carrier.

    ``carrier`` is ``"F"`` for traces on the derived diagram (keys are diagram vertices) and
    ``"Lambda"`` for traces on Λ_E (keys are identity morphisms (v, j)).
    """

    carrier: str
    values: dict = field(default_factory=dict)
    normalization: str = "none"

    def __post_init__(self):
        self.values = {v: Fraction(x) for v, x in self.values.items()}

    def __call__(self, v):
        try:
            return self.values[v]
        except KeyError:
            raise PreconditionError(f"trace is not defined at {v}") from None

    def is_nonnegative(self):
        return all(x >= 0 for x in self.values.values())

    def is_faithful(self):
        return all(x > 0 for x in self.values.values())


def check_graph_trace(g, graph):
    """Check the per-degree edge identity at every vertex of a truncated k-graph.

    Returns
    -------
    result: Tuple[bool, Optional[Tuple[vertex, int]]]
        (True, None), or (False, (vertex, i)) for the first failing identity.
    """
    for v in graph.vertices:
        for i in range(graph.rank):
            edges = graph.with_range(v, dg.unit(graph.rank, i))
            if not edges:
                continue
            if g(v) != sum((g(graph.s(lam)) for lam in edges), Fraction(0)):
                logger.debug("Trace identity fails at %s in degree e_%d", v, i + 1)
                return False, (v, i)
    return True, None


def check_F_trace(h, E, levels=None):
    """Check h(v) = Σ_{e ∈ vE^1} l(e) h(s(e)) wherever the next level carries values."""
    if levels is None:
        levels = max(v.level for v in h.values) if h.values else 0
    for n in range(1, levels):
        for v in E.level(n):
            total = sum((E.ratio(e) * h(e.source) for e in E.r_edges(v)), Fraction(0))
            if h(v) != total:
                return False, v
    return True, None


def lift_trace(h, E, levels=None):
    """g_h((v, j)) = h(v): the graph trace on Λ_E of an F-trace."""
    ok, witness = check_F_trace(h, E, levels)
    if not ok:
        raise PreconditionError(f"h violates the F identity at {E.name(witness)}")
    values = {}
    for v, x in h.values.items():
        for j in range(E.weight(v)):
            values[lambda_vertex(E, v, j)] = x
    return GraphTrace("Lambda", values, h.normalization)


def restrict_trace(g):
    """h(v) = g((v, 0))."""
    values = {key.range_vertex: x for key, x in g.values.items() if key.range_index == 0}
    return GraphTrace("F", values, g.normalization)


def collection_of(g):
    """Split a Λ_E trace into the per-vertex functions g_v(j) = g((v, j))."""
    collection = {}
    for key, x in g.values.items():
        collection.setdefault(key.range_vertex, {})[key.range_index] = x
    return collection


def glue(collection, E):
    """The Λ_E function with g((v, j)) = g_v(j)."""
    values = {}
    for v, g_v in collection.items():
        for j, x in g_v.items():
            values[lambda_vertex(E, v, j)] = x
    return GraphTrace("Lambda", values)


def compatibility_check(collection, E, levels):
    """Check the gluing identity g_v(u) = Σ_{e ∈ vE^1} Σ_{p_e(w) = u} g_{s(e)}(w).

    Every g_v must also be a graph trace on the cycle graph Λ_v, i.e. constant. The identity
    is checked at every u ∈ Z/w(v) for v on levels 1..levels-1.
    """
    for v, g_v in collection.items():
        if len(set(g_v.values())) > 1:
            logger.debug("g_%s is not constant on its cycle", E.name(v))
            return False
    for n in range(1, levels):
        for v in E.level(n):
            w = E.weight(v)
            for u in range(w):
                total = Fraction(0)
                for e in E.r_edges(v):
                    upper = collection.get(e.source, {})
                    total += sum(
                        (upper.get(x, Fraction(0)) for x in range(u, E.weight(e.source), w)),
                        Fraction(0),
                    )
                if collection.get(v, {}).get(u, Fraction(0)) != total:
                    logger.debug("Gluing identity fails at (%s, %d)", E.name(v), u)
                    return False
    return True
