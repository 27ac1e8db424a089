# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Level representatives of K_0 and K_1 classes.

At level n, K_0 is the direct sum of (1/w(v))Z + θZ over the vertices v of the level and K_1
is a direct sum of copies of Z^2. Both are stored as one integer pair per vertex: (p, q)
stands for p/w(v) + qθ in K_0 and (a, b) for a(1,0) + b(0,1) in K_1.
"""
# pylint: disable=invalid-name
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import ThetaReal
from ..errors import ParseError, PreconditionError
from ..kgraph import loop_morphisms

_CLASS_RE = re.compile(r"^\s*k(?P<kind>[01])@(?P<level>\d+)\s*:(?P<body>.*)$")
_ENTRY_RE = re.compile(r"^\s*(?P<name>[^=\s]+)\s*=\s*\(\s*(?P<p>[+-]?\d+)\s*,\s*(?P<q>[+-]?\d+)\s*\)\s*$")


@dataclass(frozen=True)
class _LevelClass:
    level: int
    coords: tuple
    diagram: object = field(compare=False, hash=False, repr=False)

    prefix = "k"

    def __post_init__(self):
        size = len(self.diagram.level(self.level))
        coords = tuple((int(p), int(q)) for p, q in self.coords)
        if len(coords) != size:
            raise PreconditionError(
                f"level {self.level} has {size} vertices, got {len(coords)} coordinates"
            )
        object.__setattr__(self, "coords", coords)

    def _new(self, level, coords):
        return type(self)(level, tuple(coords), self.diagram)

    def _check(self, other):
        if type(other) is not type(self) or other.level != self.level:
            raise PreconditionError(f"cannot combine {self} with {other}")

    def __add__(self, other):
        self._check(other)
        return self._new(self.level, ((a + c, b + d) for (a, b), (c, d) in zip(self.coords, other.coords)))

    def __neg__(self):
        return self._new(self.level, ((-a, -b) for a, b in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        return self._new(self.level, ((n * a, n * b) for a, b in self.coords))

    def is_zero(self):
        return all(a == 0 and b == 0 for a, b in self.coords)

    def vertices(self):
        return self.diagram.level(self.level)

    def __str__(self):
        return format_class(self)


class KZeroClass(_LevelClass):
    """Σ_v (p_v/w(v) + q_v θ) δ_v at one level."""

    prefix = "k0"

    def value(self, idx):
        """The ThetaReal value of one coordinate."""
        p, q = self.coords[idx]
        v = self.vertices()[idx]
        return ThetaReal(Fraction(p, self.diagram.weight(v)), q)

    def values(self):
        return [self.value(idx) for idx in range(len(self.coords))]


class KOneClass(_LevelClass):
    """Σ_v (a_v, b_v) δ_v at one level."""

    prefix = "k1"


def zero_class(E, level, kind=KZeroClass):
    return kind(level, ((0, 0),) * len(E.level(level)), E)


def basis_class(E, v, coord, kind=KZeroClass):
    """The class with the single coordinate ``coord`` at v."""
    coords = [(0, 0)] * len(E.level(v.level))
    coords[v.index] = tuple(coord)
    return kind(v.level, tuple(coords), E)


def vertex_class(E, v, i=0):
    """h_0([s_(v,i)]) = (1/w(v)) δ_v, the same class for every index i."""
    if not 0 <= i < E.weight(v):
        raise PreconditionError(f"index {i} out of range for {E.name(v)}")
    return basis_class(E, v, (1, 0))


def unit_class(E, level):
    """Σ_v w(v) vertex_class(v): the class of the sum of all vertex projections of the level."""
    return KZeroClass(level, tuple((E.weight(v), 0) for v in E.level(level)), E)


def k1_generators(E, v, i=0):
    """The K_1 classes (1,0)δ_v of [s_{μ_i}] and (0,1)δ_v of [s_{ν_i}].

    μ_i and ν_i are the unique morphisms at (v, i) of degrees (w(v), 0) and (w(v) - 1, 1).
    """
    mu, nu = loop_morphisms(E, v, i)
    assert mu.source() == mu.range() and nu.source() == nu.range()
    return basis_class(E, v, (1, 0), KOneClass), basis_class(E, v, (0, 1), KOneClass)


def format_class(x):
    """``k0@n: v1=(p,q); v2=(p,q)``, vertices in index order."""
    body = "; ".join(
        f"{x.diagram.name(v)}=({p},{q})" for v, (p, q) in zip(x.vertices(), x.coords)
    )
    return f"{x.prefix}@{x.level}: {body}"


def parse_class(E, text):
    """Parse the ``k0@n: ...`` / ``k1@n: ...`` syntax; omitted vertices are zero."""
    match = _CLASS_RE.match(text)
    if match is None:
        raise ParseError(f"Malformed class: {text!r}")
    kind = KZeroClass if match.group("kind") == "0" else KOneClass
    level = int(match.group("level"))
    if not E.has_level(level):
        raise ParseError(f"Diagram has no level {level}")
    coords = [(0, 0)] * len(E.level(level))
    body = match.group("body").strip()
    for entry in filter(None, (part.strip() for part in body.split(";"))):
        parsed = _ENTRY_RE.match(entry)
        if parsed is None:
            raise ParseError(f"Malformed class entry: {entry!r}")
        try:
            v = E.vertex(parsed.group("name"))
        except KeyError as err:
            raise ParseError(str(err)) from err
        if v.level != level:
            raise ParseError(f"{parsed.group('name')} is not on level {level}")
        coords[v.index] = (int(parsed.group("p")), int(parsed.group("q")))
    return kind(level, tuple(coords), E)
