# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Cochains on truncated k-graphs and the coboundary operator.

Only interior tuples are considered: composable r-tuples whose total composite, and hence
every partial composite, lies within the degree bound. Vertices form the 0-tuples and are
written as 1-tuples ``(v,)``.
"""
# pylint: disable=invalid-name
import logging
from fractions import Fraction

from ..arith import CirclePoint
from ..errors import PreconditionError, TruncationError
from ..kgraph import degree as dg

logger = logging.getLogger("Cohomology")  # pylint: disable=invalid-name


class Coefficients:
    """An abelian group with decidable equality."""

    name = "A"

    def zero(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, x, n):
        """n*x for an integer n."""
        result = self.zero()
        base = x if n >= 0 else self.neg(x)
        for _ in range(abs(n)):
            result = self.add(result, base)
        return result

    def random(self, rng):
        raise NotImplementedError

    def format(self, x):
        return str(x)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class ZMod(Coefficients):
    """Z/mZ with values stored as residues in [0, m)."""

    def __init__(self, m):
        if m < 2:
            raise PreconditionError(f"Z/mZ needs m >= 2, got {m}")
        self.m = m
        self.name = f"Z/{m}"

    def zero(self):
        return 0

    def add(self, x, y):
        return (x + y) % self.m

    def neg(self, x):
        return (-x) % self.m

    def scale(self, x, n):
        return (x * n) % self.m

    def random(self, rng):
        return int(rng.integers(0, self.m))


class Integers(Coefficients):
    name = "Z"

    def zero(self):
        return 0

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def scale(self, x, n):
        return x * n

    def random(self, rng):
        return int(rng.integers(-9, 10))


class CircleTheta(Coefficients):
    """The circle group in exponent form a + b*theta (mod 1)."""

    name = "T"

    def zero(self):
        return CirclePoint()

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def scale(self, x, n):
        return CirclePoint(x.a * n, x.b * n)

    def random(self, rng):
        return CirclePoint(Fraction(int(rng.integers(0, 12)), 12), int(rng.integers(-3, 4)))


def is_interior(graph, tup):
    """Whether a tuple is composable with its total degree inside the bound."""
    for left, right in zip(tup, tup[1:]):
        if left not in graph or right not in graph or graph.s(left) != graph.r(right):
            return False
    if any(x not in graph for x in tup):
        return False
    total = dg.zero(graph.rank)
    for x in tup:
        total = dg.add(total, graph.d(x))
    return dg.leq(total, graph.bound)


def is_degenerate(graph, tup):
    """Whether some entry is an identity morphism."""
    return any(graph.is_vertex(x) for x in tup)


def composable_tuples(graph, r):
    """All interior r-tuples in lexicographic order of enumeration positions.

    Parameters
    ----------
    graph: TruncatedKGraph
        Λ.

    r: int
        Arity; r = 0 gives the vertices as 1-tuples.

    Returns
    -------
    tuples: List[tuple]
    """
    if r < 0:
        raise PreconditionError(f"arity must be >= 0, got {r}")
    if r == 0:
        return [(v,) for v in graph.vertices]
    result = [((lam,), lam) for lam in graph]
    for _ in range(r - 1):
        grown = []
        for tup, acc in result:
            for nu in graph.with_range(graph.s(tup[-1])):
                if graph.composable(acc, nu):
                    grown.append((tup + (nu,), graph.compose(acc, nu)))
        result = grown
    return [tup for tup, _ in result]


class Cochain:
    """An r-cochain with values in ``coefficients``.

    Values are stored sparsely: an interior tuple without a stored value evaluates to zero.
    Evaluating a tuple that is not interior raises TruncationError.
    """

    def __init__(self, graph, arity, coefficients, values=None):
        self.graph = graph
        self.arity = arity
        self.coefficients = coefficients
        self.values = dict(values or {})

    def __repr__(self):
        return f"Cochain(arity={self.arity}, {self.coefficients}, on {self.graph.name})"

    def __call__(self, *tup):
        return self.value(tuple(tup))

    def value(self, tup):
        if tup in self.values:
            return self.values[tup]
        if len(tup) != max(self.arity, 1) or not is_interior(self.graph, tup):
            raise TruncationError(f"{tup} is not an interior {self.arity}-tuple of {self.graph.name}")
        return self.coefficients.zero()

    def tuples(self):
        return composable_tuples(self.graph, self.arity)

    def items(self):
        """(tuple, value) over all interior tuples in enumeration order."""
        for tup in self.tuples():
            yield tup, self.value(tup)

    def _combine(self, other, op):
        if other.graph is not self.graph or other.arity != self.arity:
            raise PreconditionError("cochains live on different graphs or arities")
        keys = set(self.values) | set(other.values)
        return Cochain(
            self.graph,
            self.arity,
            self.coefficients,
            {tup: op(self.value(tup), other.value(tup)) for tup in keys},
        )

    def __add__(self, other):
        return self._combine(other, self.coefficients.add)

    def __sub__(self, other):
        return self._combine(other, self.coefficients.sub)

    def __neg__(self):
        neg = self.coefficients.neg
        return Cochain(self.graph, self.arity, self.coefficients, {k: neg(v) for k, v in self.values.items()})

    def is_zero(self):
        zero = self.coefficients.zero()
        return all(v == zero for v in self.values.values())

    def first_difference(self, other):
        """The first interior tuple on which two cochains differ, or None."""
        for tup in self.tuples():
            if self.value(tup) != other.value(tup):
                return tup
        return None

    def is_normalized(self):
        """Whether the cochain vanishes on every tuple containing an identity."""
        if self.arity == 0:
            return True
        zero = self.coefficients.zero()
        return all(
            v == zero for tup, v in self.values.items() if is_degenerate(self.graph, tup)
        )


def delta(f):
    """The coboundary δ^r f, an (r+1)-cochain evaluated on every interior tuple.

    δ^0 f(λ) = f(s(λ)) - f(r(λ)) and, for r >= 1,
    δ^r f(λ_1, ..., λ_{r+1}) = f(λ_2, ..., λ_{r+1})
        + Σ_{i=1}^{r} (-1)^i f(λ_1, ..., λ_i λ_{i+1}, ..., λ_{r+1})
        + (-1)^{r+1} f(λ_1, ..., λ_r).
    """
    graph, A, r = f.graph, f.coefficients, f.arity
    values = {}
    for tup in composable_tuples(graph, r + 1):
        if r == 0:
            (lam,) = tup
            values[tup] = A.sub(f(graph.s(lam)), f(graph.r(lam)))
            continue
        total = f.value(tup[1:])
        for i in range(1, r + 1):
            merged = tup[: i - 1] + (graph.compose(tup[i - 1], tup[i]),) + tup[i + 1 :]
            term = f.value(merged)
            total = A.add(total, term if i % 2 == 0 else A.neg(term))
        last = f.value(tup[:-1])
        total = A.add(total, last if (r + 1) % 2 == 0 else A.neg(last))
        values[tup] = total
    return Cochain(graph, r + 1, A, values)


def is_cocycle(c):
    """Check c(λ,μ) + c(λμ,ν) = c(μ,ν) + c(λ,μν) on every interior triple.

    Returns
    -------
    result: Tuple[bool, Optional[tuple]]
        (True, None), or (False, the first violating triple).
    """
    if c.arity != 2:
        raise PreconditionError(f"the cocycle identity needs a 2-cochain, got arity {c.arity}")
    graph, A = c.graph, c.coefficients
    for lam, mu, nu in composable_tuples(graph, 3):
        lam_mu, mu_nu = graph.compose(lam, mu), graph.compose(mu, nu)
        left = A.add(c(lam, mu), c(lam_mu, nu))
        right = A.add(c(mu, nu), c(lam, mu_nu))
        if left != right:
            logger.debug("Cocycle identity fails on (%s, %s, %s)", lam, mu, nu)
            return False, (lam, mu, nu)
    return True, None


def random_cochain(graph, r, coefficients, rng):
    """A normalized r-cochain with independent random values on non-degenerate tuples."""
    values = {}
    for tup in composable_tuples(graph, r):
        if r > 0 and is_degenerate(graph, tup):
            continue
        values[tup] = coefficients.random(rng)
    return Cochain(graph, r, coefficients, values)


def random_coboundary(graph, coefficients, rng):
    """δ^1 b for a random normalized 1-cochain b."""
    return delta(random_cochain(graph, 1, coefficients, rng))


def compose_with(c, domain, mapping):
    """φ_* c on ``domain``: (λ_1, ..., λ_r) -> c(φ(λ_1), ..., φ(λ_r))."""
    values = {
        tup: c.value(tuple(mapping(x) for x in tup)) for tup in composable_tuples(domain, c.arity)
    }
    return Cochain(domain, c.arity, c.coefficients, values)


def push_forward(c, covering):
    """(p)_* c for a covering p whose codomain carries c."""
    if covering.codomain is not c.graph:
        raise PreconditionError(f"{c} does not live on the codomain of {covering}")
    return compose_with(c, covering.domain, covering)


def restrict(c, subgraph):
    """c restricted to the interior tuples of a subgraph."""
    values = {tup: c.value(tup) for tup in composable_tuples(subgraph, c.arity)}
    return Cochain(subgraph, c.arity, c.coefficients, values)


def dump_cochain(c):
    """One line per interior tuple: enumeration positions, a TAB, the value."""
    lines = []
    for tup, value in c.items():
        ids = ",".join(str(c.graph.position(x)) for x in tup)
        lines.append(f"{ids}\t{c.coefficients.format(value)}")
    return "\n".join(lines) + ("\n" if lines else "")
