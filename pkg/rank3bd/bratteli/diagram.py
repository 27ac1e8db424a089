# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Weighted Bratteli diagrams and the derived multiplicity diagram.

Levels are numbered from 1. An edge e goes from its source s(e) at level n+1 to its range
r(e) at level n. For a vertex v, ``r_edges(v)`` is vE^1 (edges with range v, leading one level
up) and ``s_edges(v)`` is E^1v (edges with source v, leading one level down).
"""
# pylint: disable=too-many-instance-attributes
import logging
import threading
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError, TruncationError

logger = logging.getLogger("Bratteli")  # pylint: disable=invalid-name

Vertex = namedtuple("Vertex", ["level", "index"])
Edge = namedtuple("Edge", ["source", "range"])
Violation = namedtuple("Violation", ["kind", "subject", "message"])

REPEAT = "repeat"
BRANCH = "branch"


def _generated_level_of(name):
    """n for a generated name ``x@n`` or ``x@n.copy``, 0 for any other name."""
    _, sep, rest = name.partition("@")
    try:
        return int(rest.split(".")[0]) if sep else 0
    except ValueError:
        return 0


@dataclass(frozen=True)
class Stationary:
    """Levels >= start_level repeat with the given period.

    In ``repeat`` mode level n+period is a copy of level n (same vertex count and edge
    pattern, weights multiplied by one integer factor). In ``branch`` mode the start level has a
    single root and the block of levels below it is copied under every vertex of the block's
    last level.
    """

    start_level: int
    period: int
    mode: str = REPEAT


@dataclass(frozen=True)
class _Level:
    names: tuple
    weights: tuple
    # (source index at this level, range index at the previous level)
    down: tuple


class WeightedBratteli:
    """A weighted Bratteli diagram given by a finite prefix and an optional stationary tail.

    Parameters
    ----------
    levels: List[List[Tuple[str, int]]]
        (name, weight) pairs per level, level 1 first.

    edges: Iterable[Tuple[str, str]]
        (source name, range name) pairs; the source lies one level above the range.

    stationary: Optional[Stationary]
        Declares how levels past the prefix are generated.
    """

    def __init__(self, levels, edges, stationary=None):
        if not levels:
            raise ParseError("A diagram needs at least one level")
        self.stationary = stationary
        self._lookup = {}
        names, weights = [], []
        for n, level in enumerate(levels, start=1):
            if not level:
                raise ParseError(f"Level {n} is empty")
            names.append(tuple(str(name) for name, _ in level))
            weights.append(tuple(weight for _, weight in level))
            for idx, (name, weight) in enumerate(level):
                if not isinstance(weight, int) or isinstance(weight, bool):
                    raise ParseError(f"Weight of {name} must be an integer, got {weight!r}")
                if name in self._lookup:
                    raise ParseError(f"Duplicate vertex name {name}")
                self._lookup[name] = Vertex(n, idx)

        down = [[] for _ in levels]
        self.duplicate_edges = []
        seen = set()
        for src_name, rng_name in edges:
            if src_name not in self._lookup or rng_name not in self._lookup:
                raise ParseError(f"Edge {src_name}->{rng_name} names an unknown vertex")
            src, rng = self._lookup[src_name], self._lookup[rng_name]
            if src.level != rng.level + 1:
                raise ParseError(
                    f"Edge {src_name}->{rng_name} must go from level n+1 to level n, "
                    f"got {src.level}->{rng.level}"
                )
            pair = (src.index, rng.index)
            if (src.level, pair) in seen:
                self.duplicate_edges.append(Edge(src, rng))
                continue
            seen.add((src.level, pair))
            down[src.level - 1].append(pair)

        self.num_levels = len(levels)
        self._levels = {
            n: _Level(names[n - 1], weights[n - 1], tuple(sorted(down[n - 1])))
            for n in range(1, self.num_levels + 1)
        }
        self.stationary_problems = self._check_stationary_shape()
        # Levels past the prefix are derived data; the prefix and _lookup stay frozen.
        self._generated = {}
        self._generated_lock = threading.RLock()

    # ------------------------------------------------------------------
    # Stationary extension
    # ------------------------------------------------------------------
    def _check_stationary_shape(self):
        """Problems that prevent generating levels past the prefix."""
        stat = self.stationary
        if stat is None:
            return []
        k, p = stat.start_level, stat.period
        if k < 1 or p < 1:
            return [f"start_level and period must be >= 1, got {k}, {p}"]
        if stat.mode not in (REPEAT, BRANCH):
            return [f"unknown stationary mode {stat.mode!r}"]
        if self.num_levels < k + p:
            return [f"prefix has {self.num_levels} levels, the block needs {k + p}"]
        first, last = self._levels[k], self._levels[k + p]
        if any(w <= 0 for n in range(k, k + p + 1) for w in self._levels[n].weights):
            return ["block weights must be positive"]
        if stat.mode == REPEAT:
            if len(first.names) != len(last.names):
                return [f"levels {k} and {k + p} have different vertex counts"]
            ratios = {Fraction(b, a) for a, b in zip(first.weights, last.weights)}
            if len(ratios) != 1 or list(ratios)[0].denominator != 1:
                return [f"weights of level {k + p} are not one integer multiple of level {k}"]
        else:
            if len(first.names) != 1:
                return [f"branch mode needs a single vertex at level {k}"]
            root = first.weights[0]
            if any(w % root for w in last.weights):
                return [f"weights of level {k + p} must be multiples of the root weight"]
        return []

    @property
    def is_stationary(self):
        return self.stationary is not None and not self.stationary_problems

    def _weight_factor(self):
        k, p = self.stationary.start_level, self.stationary.period
        return self._levels[k + p].weights[0] // self._levels[k].weights[0]

    def _generate_level(self, n):
        """Level n computed from the stationary block, regardless of the prefix."""
        k, p = self.stationary.start_level, self.stationary.period
        offset = (n - k - 1) % p + 1
        template = self._levels[k + offset]
        if self.stationary.mode == REPEAT:
            power = (n - k - offset) // p
            factor = self._weight_factor() ** power
            names = tuple(f"{name}@{n}" for name in template.names)
            weights = tuple(w * factor for w in template.weights)
            return _Level(names, weights, template.down)

        root_level = n - offset
        roots = self.level_data(root_level)
        root_weight = self._levels[k].weights[0]
        below = self._levels[k + offset - 1]
        names, weights, down = [], [], []
        for copy, parent_weight in enumerate(roots.weights):
            scale = parent_weight // root_weight
            for idx, name in enumerate(template.names):
                names.append(f"{name}@{n}.{copy}")
                weights.append(template.weights[idx] * scale)
            base = copy * len(template.names)
            for src, rng in template.down:
                target = copy if offset == 1 else copy * len(below.names) + rng
                down.append((base + src, target))
        return _Level(tuple(names), tuple(weights), tuple(sorted(down)))

    def level_data(self, n):
        """Raw data of level n, generating stationary levels on demand."""
        if n in self._levels:
            return self._levels[n]
        if n < 1:
            raise TruncationError(f"Level {n} does not exist")
        if not self.is_stationary:
            raise TruncationError(
                f"Level {n} lies past the {self.num_levels} given levels of a non-stationary diagram"
            )
        with self._generated_lock:
            for m in range(self.num_levels + 1, n + 1):
                if m not in self._generated:
                    self._generated[m] = self._generate_level(m)
            return self._generated[n]

    def has_level(self, n):
        return n >= 1 and (n <= self.num_levels or self.is_stationary)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    def level(self, n):
        """The vertices of level n in index order."""
        return tuple(Vertex(n, idx) for idx in range(len(self.level_data(n).names)))

    def vertex(self, name):
        """Look a vertex up by name."""
        if name in self._lookup:
            return self._lookup[name]
        n = _generated_level_of(name)
        if self.is_stationary and n > self.num_levels:
            names = self.level_data(n).names
            if name in names:
                return Vertex(n, names.index(name))
        raise KeyError(f"Unknown vertex {name}")

    def name(self, v):
        return self.level_data(v.level).names[v.index]

    def weight(self, v):
        return self.level_data(v.level).weights[v.index]

    def edges_between(self, n):
        """Edges from level n+1 down to level n, ordered by (source index, range index)."""
        data = self.level_data(n + 1)
        return tuple(Edge(Vertex(n + 1, s), Vertex(n, r)) for s, r in data.down)

    def r_edges(self, v):
        """vE^1: edges with range v, ordered by source index."""
        return tuple(e for e in self.edges_between(v.level) if e.range == v)

    def s_edges(self, v):
        """E^1v: edges with source v, ordered by range index."""
        if v.level == 1:
            return ()
        return tuple(e for e in self.edges_between(v.level - 1) if e.source == v)

    def has_edge(self, source, rng):
        return Edge(source, rng) in self.edges_between(rng.level)

    def ratio(self, e):
        """l(e) = w(s(e)) / w(r(e)); an integer on valid diagrams."""
        return self.weight(e.source) // self.weight(e.range)

    def __repr__(self):
        return f"WeightedBratteli(levels={self.num_levels}, stationary={self.stationary})"


class MultiplicityBratteli:
    """The diagram F derived from a weighted diagram E: same vertices, one edge per E-edge with
    multiplicity w(s(e))/w(r(e)). The weights of E stay reachable through ``weighted`` for the
    corner normalization of traces.
    """

    def __init__(self, weighted):
        self.weighted = weighted

    @property
    def num_levels(self):
        return self.weighted.num_levels

    @property
    def is_stationary(self):
        return self.weighted.is_stationary

    def has_level(self, n):
        return self.weighted.has_level(n)

    def level(self, n):
        return self.weighted.level(n)

    def name(self, v):
        return self.weighted.name(v)

    def vertex(self, name):
        return self.weighted.vertex(name)

    def r_edges(self, v):
        return self.weighted.r_edges(v)

    def s_edges(self, v):
        return self.weighted.s_edges(v)

    def edges_between(self, n):
        return self.weighted.edges_between(n)

    def multiplicity(self, e):
        return self.weighted.ratio(e)


def derived_F(E):  # pylint: disable=invalid-name
    """The multiplicity diagram F of E."""
    return MultiplicityBratteli(E)


def validate(E):
    """Check every invariant of a weighted Bratteli diagram.

    Parameters
    ----------
    E: WeightedBratteli
        The diagram.

    Returns
    -------
    report: List[Violation]
        Every violated invariant with the offending vertex or edge; empty iff E is valid.
    """
    report = []
    for e in E.duplicate_edges:
        report.append(
            Violation(
                "singly-connected",
                f"{E.name(e.source)}->{E.name(e.range)}",
                "more than one edge joins this ordered vertex pair",
            )
        )
    for n in range(1, E.num_levels + 1):
        for v in E.level(n):
            if E.weight(v) <= 0:
                report.append(Violation("weight", E.name(v), f"weight {E.weight(v)} is not positive"))

    for problem in E.stationary_problems:
        report.append(Violation("stationary", "stationary", problem))
    if E.is_stationary:
        k, p = E.stationary.start_level, E.stationary.period
        # pylint: disable=protected-access
        for n in range(k + p + 1, E.num_levels + 1):
            given, generated = E.level_data(n), E._generate_level(n)
            if (given.weights, given.down) != (generated.weights, generated.down):
                report.append(
                    Violation("stationary", f"level {n}", "level does not repeat the declared block")
                )

    last = E.num_levels if not E.is_stationary else E.num_levels + 1
    for n in range(1, last + 1):
        for v in E.level(n):
            if n < last and not E.r_edges(v):
                report.append(
                    Violation("emission", E.name(v), f"no edge to level {n + 1} has range here")
                )
            if n > 1 and not E.s_edges(v):
                report.append(
                    Violation("reception", E.name(v), f"no edge from here to level {n - 1}")
                )
        if n > 1:
            for e in E.edges_between(n - 1):
                ws, wr = E.weight(e.source), E.weight(e.range)
                if wr > 0 and ws % wr != 0:
                    report.append(
                        Violation(
                            "divisibility",
                            f"{E.name(e.source)}->{E.name(e.range)}",
                            f"w(r(e))={wr} does not divide w(s(e))={ws}",
                        )
                    )
    if report:
        logger.debug("Diagram has %d violations", len(report))
    return report


def path_count(E, v):
    """Number of paths from level 1 to v, the size |E^0_1 E^* v| of the matrix corner."""
    counts = {u: 1 for u in E.level(1)}
    for n in range(2, v.level + 1):
        counts = {u: sum(counts[e.range] for e in E.s_edges(u)) for u in E.level(n)}
    return counts[v]


def first_path(E, levels):
    """The path starting at the first level-1 vertex that always moves to the lowest-index
    source; used to pick a covering sequence out of E.
    """
    path = [E.level(1)[0]]
    for _ in range(1, levels):
        edges = E.r_edges(path[-1])
        if not edges:
            raise TruncationError(f"Vertex {E.name(path[-1])} has no edge to the next level")
        path.append(edges[0].source)
    return path


def restrict_to_path(E, path):
    """The chain subdiagram of E along ``path`` (level-1 rooted, consecutive levels)."""
    if not path or path[0].level != 1:
        raise TruncationError("A path must start at level 1")
    for lower, upper in zip(path, path[1:]):
        if upper.level != lower.level + 1 or not E.has_edge(upper, lower):
            raise TruncationError(f"{E.name(upper)}->{E.name(lower)} is not an edge of the diagram")
    levels = [[(E.name(v), E.weight(v))] for v in path]
    edges = [(E.name(upper), E.name(lower)) for lower, upper in zip(path, path[1:])]
    return WeightedBratteli(levels, edges)


def level_description(E, n):
    """The summands (1/w(v))Z+θZ of the level-n group, one line per vertex."""
    return [f"{E.name(v)}: (1/{E.weight(v)})Z+θZ" for v in E.level(n)]
