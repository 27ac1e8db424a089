# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Truncated k-graphs: all morphisms of degree below a bound, with the partial composition
between them, plus the standard builders.

A vertex is identified with the key of its identity morphism.
"""
# pylint: disable=too-many-instance-attributes, too-many-arguments
import hashlib
import itertools
import logging
from collections import defaultdict, namedtuple

from ..errors import PreconditionError, TruncationError
from ..utils import timed
from . import degree as dg

logger = logging.getLogger("KGraph")  # pylint: disable=invalid-name

Morphism = namedtuple("Morphism", ["key", "range", "source", "degree"])


class TruncatedKGraph:
    """The morphisms of a k-graph with degree at most ``bound``.

    Parameters
    ----------
    rank: int
        k.

    bound: Tuple[int]
        The degree bound N.

    morphisms: Iterable[Tuple[key, range key, source key, degree]]
        Every morphism of degree <= N. Keys must be hashable and mutually comparable.

    compose: Callable[[key, key], key]
        Composition, called on every composable pair whose degrees add up to at most N.

    name: str
        Used in logs and reprs.

    The composition table and the factorisation property are checked on construction; a
    ValueError is raised if the data is not a truncated k-graph.
    """

    @timed("kgraph.build")
    def __init__(self, rank, bound, morphisms, compose, name="graph"):
        self.rank = rank
        self.bound = tuple(bound)
        self.name = name
        if len(self.bound) != rank:
            raise PreconditionError(f"bound {self.bound} does not have rank {rank}")

        self._morphisms = {}
        for key, rng, src, deg in morphisms:
            deg = tuple(deg)
            if len(deg) != rank or not dg.leq(deg, self.bound):
                raise ValueError(f"{name}: degree {deg} of {key} exceeds the bound {self.bound}")
            if key in self._morphisms:
                raise ValueError(f"{name}: duplicate morphism {key}")
            self._morphisms[key] = Morphism(key, rng, src, deg)

        self.order = sorted(self._morphisms, key=self.sort_key)
        self._position = {key: idx for idx, key in enumerate(self.order)}
        self.vertices = [key for key in self.order if self._morphisms[key].degree == dg.zero(rank)]
        for key in self.vertices:
            mor = self._morphisms[key]
            if mor.range != key or mor.source != key:
                raise ValueError(f"{name}: degree-0 morphism {key} is not an identity")
        vertex_set = set(self.vertices)
        for mor in self._morphisms.values():
            if mor.range not in vertex_set or mor.source not in vertex_set:
                raise ValueError(f"{name}: {mor.key} has a range or source without identity")

        self._by_range = defaultdict(list)
        for key in self.order:
            self._by_range[self._morphisms[key].range].append(key)

        self._table = {}
        self._splits = {}
        self._build_table(compose)
        logger.debug(
            "Built %s: %d vertices, %d morphisms, %d composable pairs",
            name,
            len(self.vertices),
            len(self._morphisms),
            len(self._table),
        )

    def sort_key(self, key):
        mor = self._morphisms[key]
        return (mor.range, mor.degree, key)

    def _build_table(self, compose):
        counts = defaultdict(int)
        for mu in self.order:
            m_mu = self._morphisms[mu]
            for nu in self._by_range[m_mu.source]:
                m_nu = self._morphisms[nu]
                deg = dg.add(m_mu.degree, m_nu.degree)
                if not dg.leq(deg, self.bound):
                    continue
                lam = compose(mu, nu)
                m_lam = self._morphisms.get(lam)
                if m_lam is None:
                    raise ValueError(f"{self.name}: {mu} {nu} composes to unknown {lam}")
                if (m_lam.range, m_lam.source, m_lam.degree) != (m_mu.range, m_nu.source, deg):
                    raise ValueError(f"{self.name}: composition of {mu} and {nu} is not functorial")
                self._table[(mu, nu)] = lam
                self._splits[(lam, m_mu.degree)] = (mu, nu)
                counts[(lam, m_mu.degree)] += 1
        for lam, mor in self._morphisms.items():
            for split in dg.below(mor.degree):
                if counts[(lam, split)] != 1:
                    raise ValueError(
                        f"{self.name}: {counts[(lam, split)]} factorisations of {lam} at {split}"
                    )

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    def __contains__(self, key):
        return key in self._morphisms

    def __len__(self):
        return len(self._morphisms)

    def __iter__(self):
        return iter(self.order)

    def __repr__(self):
        return f"TruncatedKGraph({self.name}, rank={self.rank}, bound={self.bound})"

    def morphism(self, key):
        try:
            return self._morphisms[key]
        except KeyError:
            raise TruncationError(f"{key} is not a morphism of {self.name}") from None

    def r(self, key):
        return self.morphism(key).range

    def s(self, key):
        return self.morphism(key).source

    def d(self, key):
        return self.morphism(key).degree

    def is_vertex(self, key):
        return key in self._morphisms and self._morphisms[key].degree == dg.zero(self.rank)

    def position(self, key):
        """Index of a morphism in the deterministic enumeration order."""
        return self._position[key]

    def with_range(self, v, degree=None):
        """vΛ, or vΛ^degree when a degree is given."""
        keys = self._by_range.get(v, [])
        if degree is None:
            return list(keys)
        degree = tuple(degree)
        return [key for key in keys if self._morphisms[key].degree == degree]

    def with_degree(self, degree):
        degree = tuple(degree)
        return [key for key in self.order if self._morphisms[key].degree == degree]

    def edges(self, i):
        """Λ^{e_i}, with i counted from 0."""
        return self.with_degree(dg.unit(self.rank, i))

    def composable(self, mu, nu):
        return (mu, nu) in self._table

    def compose(self, mu, nu):
        """The composite mu nu from the table."""
        try:
            return self._table[(mu, nu)]
        except KeyError:
            if self.s(mu) != self.r(nu):
                raise PreconditionError(f"s({mu}) != r({nu})") from None
            raise TruncationError(f"{mu} {nu} exceeds the bound {self.bound}") from None

    def factorize(self, lam, m):
        """The unique (mu, nu) with lam = mu nu and d(mu) = m."""
        m = tuple(m)
        if not dg.leq(m, self.d(lam)):
            raise PreconditionError(f"{m} is not below d({lam}) = {self.d(lam)}")
        return self._splits[(lam, m)]

    def pairs(self):
        """All composable pairs within the bound, in enumeration order."""
        return sorted(self._table, key=lambda pair: (self._position[pair[0]], self._position[pair[1]]))

    def subgraph(self, keys, name=None):
        """The full subcategory on a set of morphisms closed under factorisation."""
        keys = set(keys)
        data = [(k, m.range, m.source, m.degree) for k, m in self._morphisms.items() if k in keys]
        return TruncatedKGraph(
            self.rank, self.bound, data, lambda a, b: self._table[(a, b)], name or self.name
        )

    def fingerprint(self):
        """A stable digest of the morphisms and the composition table."""
        digest = hashlib.md5()
        for key in self.order:
            mor = self._morphisms[key]
            digest.update(f"{key}|{mor.range}|{mor.source}|{mor.degree};".encode("utf-8"))
        for mu, nu in self.pairs():
            digest.update(f"{mu}*{nu}={self._table[(mu, nu)]};".encode("utf-8"))
        return digest.hexdigest()


# ----------------------------------------------------------------------
# Builders
# ----------------------------------------------------------------------
def build_torus(k, bound):
    """T_k = N^k as a k-graph with one vertex, truncated at ``bound``."""
    if k < 1:
        raise PreconditionError(f"rank must be >= 1, got {k}")
    bound = tuple(bound)
    origin = dg.zero(k)
    data = [(m, origin, origin, m) for m in dg.below(bound)]
    return TruncatedKGraph(k, bound, data, dg.add, name=f"T{k}")


def skew_product(graph, eta, n, name=None):
    """Λ ×_η Z/nZ: morphisms (λ, g) from (s(λ), g + η(λ)) to (r(λ), g).

    Parameters
    ----------
    graph: TruncatedKGraph
        Λ.

    eta: Callable[[key], int]
        A functor to Z/nZ, given on morphism keys.

    n: int
        The order of the cyclic group.
    """
    if n < 1:
        raise PreconditionError(f"group order must be >= 1, got {n}")
    for v in graph.vertices:
        if eta(v) % n != 0:
            raise PreconditionError(f"η is not a functor: η({v}) = {eta(v)}")
    for mu, nu in graph.pairs():
        if (eta(graph.compose(mu, nu)) - eta(mu) - eta(nu)) % n != 0:
            raise PreconditionError(f"η is not a functor on the pair ({mu}, {nu})")

    data = []
    for key in graph:
        mor = graph.morphism(key)
        for g in range(n):
            data.append(
                ((key, g), (mor.range, g), (mor.source, (g + eta(key)) % n), mor.degree)
            )

    def compose(left, right):
        return (graph.compose(left[0], right[0]), left[1])

    return TruncatedKGraph(
        graph.rank, graph.bound, data, compose, name or f"{graph.name}x{n}"
    )


def build_cycle(n, bound):
    """T_2 ×_1 Z/nZ: the rank-2 cycle graph with edges (a, i), (b, i) from vertex i+1 to i."""
    return skew_product(build_torus(2, bound), dg.total, n, name=f"cycle{n}")


def build_from_graph(vertices, edges, bound):
    """The path category of a finite directed graph as a truncated 1-graph.

    Parameters
    ----------
    vertices: Sequence[str]
        Vertex names.

    edges: Sequence[Tuple[str, str]]
        (source, range) pairs; edge i is keyed by its position.

    bound: Tuple[int]
        Maximum path length, as a 1-tuple.
    """
    bound = tuple(bound)
    paths = [((v, ()), v, v) for v in vertices]
    frontier = list(paths)
    for _ in range(bound[0]):
        grown = []
        for (rng, path), _, src in frontier:
            for idx, (e_src, e_rng) in enumerate(edges):
                if e_rng == src:
                    grown.append(((rng, path + (idx,)), rng, e_src))
        paths.extend(grown)
        frontier = grown

    def vertex_key(v):
        return (v, ())

    data = [(key, vertex_key(rng), vertex_key(src), (len(key[1]),)) for key, rng, src in paths]

    def compose(left, right):
        return (left[0], left[1] + right[1])

    return TruncatedKGraph(1, bound, data, compose, name="paths")


def cartesian_product(left, right):
    """Λ × Γ as a (k+l)-graph: degrees concatenate, composition is componentwise."""
    data = []
    for lam, gam in itertools.product(left, right):
        lm, gm = left.morphism(lam), right.morphism(gam)
        data.append(((lam, gam), (lm.range, gm.range), (lm.source, gm.source), lm.degree + gm.degree))

    def compose(a, b):
        return (left.compose(a[0], b[0]), right.compose(a[1], b[1]))

    return TruncatedKGraph(
        left.rank + right.rank,
        left.bound + right.bound,
        data,
        compose,
        name=f"{left.name}*{right.name}",
    )


# ----------------------------------------------------------------------
# Boundary paths and minimal common extensions
# ----------------------------------------------------------------------
def boundary_paths(graph, v, n):
    """vΛ^{<=n}: paths λ with d(λ) <= n that cannot be extended by an e_i edge with
    d(λ) + e_i <= n.
    """
    n = tuple(n)
    if not dg.leq(n, graph.bound):
        raise TruncationError(f"{n} exceeds the bound {graph.bound}")
    result = []
    for lam in graph.with_range(v):
        deg = graph.d(lam)
        if not dg.leq(deg, n):
            continue
        blocked = True
        for i in range(graph.rank):
            e_i = dg.unit(graph.rank, i)
            if dg.leq(dg.add(deg, e_i), n) and graph.with_range(graph.s(lam), e_i):
                blocked = False
                break
        if blocked:
            result.append(lam)
    return result


def min_common_ext(graph, lam, mu):
    """All (α, β) with λα = μβ and d(λα) = d(λ) v d(μ)."""
    if graph.r(lam) != graph.r(mu):
        raise PreconditionError(f"r({lam}) != r({mu})")
    target = dg.join(graph.d(lam), graph.d(mu))
    if not dg.leq(target, graph.bound):
        raise TruncationError(f"{target} exceeds the bound {graph.bound}")
    result = []
    for alpha in graph.with_range(graph.s(lam), dg.sub(target, graph.d(lam))):
        head, beta = graph.factorize(graph.compose(lam, alpha), graph.d(mu))
        if head == mu:
            result.append((alpha, beta))
    return result
