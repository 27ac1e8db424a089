# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Covering towers: the (k+1)-graph lim(Λ_n, p_n) of a covering sequence of rank-2 cycle
graphs picked out of a weighted Bratteli diagram along a path.

Level n of the tower is Λ_n = Λ_{x_n}, the cycle graph on Z/w(x_n)Z, and p_n: Λ_{n+1} -> Λ_n
reduces indices modulo w(x_n).
"""
# pylint: disable=invalid-name
import logging

from ..bratteli import Violation, restrict_to_path
from ..errors import PreconditionError, TruncationError
from ..utils import timed
from . import degree as dg
from .covering import CoveringMap, covering_fiber, cycle_covering
from .rank3 import RankThreeMorphism, edge_e3, rank_three_graph
from .truncated import build_cycle

logger = logging.getLogger("KGraph")  # pylint: disable=invalid-name


class CoveringTower:
    """The truncation of lim(Λ_n, p_n) to ``levels`` levels.

    Parameters
    ----------
    diagram: WeightedBratteli
        The diagram the path was taken from.

    path: List[Vertex]
        x_1, ..., x_L with x_1 at level 1 and an edge x_{n+1} -> x_n for every n.

    bound: Tuple[int]
        The rank-2 degree bound (b_1, b_2); the e_3 bound is L - 1 so that every ξ_v fits.
    """

    def __init__(self, diagram, path, bound):
        bound = tuple(bound)
        if len(bound) != 2:
            raise PreconditionError(f"rank-2 bound expected, got {bound}")
        self.diagram = diagram
        self.path = list(path)
        self.levels = len(self.path)
        self.chain = restrict_to_path(diagram, self.path)
        self.bound = bound + (self.levels - 1,)
        with timed("kgraph.tower"):
            self.graph = rank_three_graph(self.chain, self.levels, self.bound)
        self._level_graphs = {}
        logger.info(
            "Tower along %s: %d morphisms, bound %s",
            "->".join(diagram.name(v) for v in self.path),
            len(self.graph),
            self.bound,
        )

    def __repr__(self):
        return f"CoveringTower(levels={self.levels}, bound={self.bound})"

    def weight(self, n):
        """w(x_n)."""
        return self.chain.weight(self.chain.level(n)[0])

    def chain_vertex(self, n):
        return self.chain.level(n)[0]

    def vertices(self, n):
        """Λ_n^0 as identity morphisms (x_n, j)."""
        x = self.chain_vertex(n)
        return [RankThreeMorphism(x, j, (0, 0), (), j, self.chain) for j in range(self.weight(n))]

    def level_of(self, lam):
        """The level of r(λ)."""
        return lam.range_vertex.level

    def level_graph(self, n):
        """Λ_n: the morphisms with range at level n and no e_3 part."""
        if not 1 <= n <= self.levels:
            raise TruncationError(f"level {n} is outside the tower")
        if n not in self._level_graphs:
            keys = [lam for lam in self.graph if lam.level == n and not lam.e3_path]
            self._level_graphs[n] = self.graph.subgraph(keys, name=f"Lambda_{n}")
        return self._level_graphs[n]

    def p_n(self, lam):
        """p_n: Λ_{n+1} -> Λ_n on a morphism of Λ_{n+1}."""
        n = lam.level - 1
        if lam.e3_path or n < 1:
            raise PreconditionError(f"{lam} is not in a level above the first")
        return self._reduce(lam, n)

    def p_1n(self, lam):
        """p_{1,n}: Λ_n -> Λ_1."""
        if lam.e3_path:
            raise PreconditionError(f"{lam} is not in a single level")
        return self._reduce(lam, 1)

    def _reduce(self, lam, n):
        w = self.weight(n)
        return RankThreeMorphism(
            self.chain_vertex(n), lam.range_index % w, lam.rank2_degree, (), lam.source_index % w, self.chain
        )

    def covering(self, n):
        """p_n as a CoveringMap from Λ_{n+1} to Λ_n."""
        upper, lower = self.level_graph(n + 1), self.level_graph(n)
        return CoveringMap(upper, lower, {lam: self.p_n(lam) for lam in upper})

    def connecting_edge(self, v):
        """e(v) for a vertex v = (x_{n+1}, j): the e_3 edge from v to p_n(v)."""
        if v.level < 2 or not v.is_vertex():
            raise PreconditionError(f"{v} is not a vertex above the first level")
        (edge,) = self.chain.s_edges(v.range_vertex)
        return edge_e3(self.chain, edge, v.range_index)

    def connecting_edges(self, n):
        """e restricted to Λ^0_{n+1}."""
        return [self.connecting_edge(v) for v in self.vertices(n + 1)]

    def xi(self, v):
        """ξ_v: the unique pure e_3 path from level 1 to the vertex v."""
        path = tuple(
            self.chain.s_edges(self.chain_vertex(m))[0] for m in range(2, v.level + 1)
        )
        w1 = self.weight(1)
        lam = RankThreeMorphism(
            self.chain_vertex(1), v.range_index % w1, (0, 0), path, v.range_index, self.chain
        )
        if lam not in self.graph:
            raise TruncationError(f"ξ at {v} leaves the truncation {self.bound}")
        return lam


def tower_from_path(E, path=None, levels=None, bound=(1, 1)):
    """Build the covering tower along ``path``, or along the chain of E itself.

    Parameters
    ----------
    E: WeightedBratteli
        A diagram; when no path is given it must be a chain over the requested levels.

    path: Optional[List[Vertex]]
        A level-1-rooted path of E.

    levels: Optional[int]
        Number of levels when ``path`` is omitted.

    bound: Tuple[int]
        The rank-2 degree bound.
    """
    if path is None:
        if levels is None:
            raise PreconditionError("give a path or a number of levels")
        path = []
        for n in range(1, levels + 1):
            level = E.level(n)
            if len(level) != 1:
                raise PreconditionError(f"level {n} of a chain must have one vertex")
            path.append(level[0])
    return CoveringTower(E, path, bound)


def tower_coverings(tower):
    """[p_1, ..., p_{L-1}]."""
    return [tower.covering(n) for n in range(1, tower.levels)]


def check_tower_properties(tower):
    """Check the defining properties of lim(Λ_n, p_n) on every enumerated morphism.

    Returns
    -------
    report: List[Violation]
        Empty iff all five hold within the truncation.
    """
    graph = tower.graph
    report = []
    seen = {}
    for n in range(1, tower.levels + 1):
        for lam in tower.level_graph(n):
            if graph.d(lam) != lam.rank2_degree + (0,):
                report.append(Violation("degree", str(lam), f"d = {graph.d(lam)}"))
            if lam in seen:
                report.append(Violation("disjoint", str(lam), f"in levels {seen[lam]} and {n}"))
            seen[lam] = n
    flat = [lam for lam in graph if graph.d(lam)[2] == 0]
    if set(flat) != set(seen):
        report.append(Violation("union", "levels", "levels do not exhaust degree-(m,0) morphisms"))

    for n in range(1, tower.levels):
        for v in tower.vertices(n + 1):
            e = tower.connecting_edge(v)
            if e not in graph or graph.d(e) != dg.unit(3, 2):
                report.append(Violation("edge", str(v), "e(v) is not a degree-e_3 morphism"))
                continue
            if graph.s(e) != v or graph.r(e) != tower.p_n(v):
                report.append(Violation("edge", str(v), "s(e(v)) != v or r(e(v)) != p_n(v)"))
        for lam in tower.level_graph(n + 1):
            left = (tower.connecting_edge(lam.range()), lam)
            right = (tower.p_n(lam), tower.connecting_edge(lam.source()))
            if not (graph.composable(*left) and graph.composable(*right)):
                report.append(
                    Violation("intertwining", str(lam), "e(r(λ))λ or p_n(λ)e(s(λ)) undefined")
                )
            elif graph.compose(*left) != graph.compose(*right):
                report.append(Violation("intertwining", str(lam), "e(r(λ))λ != p_n(λ)e(s(λ))"))
    if report:
        logger.debug("Tower check found %d violations", len(report))
    return report


def fiber_sizes(E, levels):
    """|p_e^{-1}(v)| for a vertex v of Λ_{r(e)} and every edge e below ``levels``.

    The fiber is counted on the cycle covering p_e: Λ_{s(e)} -> Λ_{r(e)}; it equals
    w(s(e)) / w(r(e)).
    """
    sizes = {}
    for n in range(1, levels):
        for e in E.edges_between(n):
            upper = build_cycle(E.weight(e.source), (0, 0))
            lower = build_cycle(E.weight(e.range), (0, 0))
            p = cycle_covering(upper, lower)
            sizes[e] = len(covering_fiber(p, lower.vertices[0]))
    return sizes
