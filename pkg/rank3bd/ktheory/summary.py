# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Closed-form descriptions of the K_0 limit, membership in level groups and simplicity."""
# pylint: disable=invalid-name
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from sympy import factorint

from ..bratteli import CofinalWitnessed, NotCofinalWitnessed, cofinality
from ..bratteli.diagram import BRANCH, REPEAT
from .classes import basis_class

logger = logging.getLogger("KTheory")  # pylint: disable=invalid-name


def representable(E, v, value):
    """The K_0 class (p, q)δ_v of a ThetaReal value in (1/w(v))Z + θZ, or None."""
    w = E.weight(v)
    p = Fraction(value.a) * w
    if p.denominator != 1 or Fraction(value.b).denominator != 1:
        return None
    return basis_class(E, v, (int(p), int(value.b)))


def _radical(n):
    return prod(factorint(n))


def _is_complete_block(E, first, last):
    for n in range(first, last):
        if len(E.edges_between(n)) != len(E.level(n)) * len(E.level(n + 1)):
            return False
    return len({len(E.level(n)) for n in range(first, last + 1)}) == 1


def limit_summary(E):
    """One line describing the limit of the K_0 level groups.

    Stationary chains give Z[1/c]+θZ for the weight growth c per period, complete stationary
    blocks of t vertices give Z[1/(tc)]+Z[θ/t] and branching blocks the infinite direct sum
    with the coordinatewise cone. Anything else is described generically.
    """
    generic = "inductive limit of ⊕(1/w(v))Z+θZ along A_n"
    if not E.is_stationary:
        return generic
    stat = E.stationary
    k, p = stat.start_level, stat.period
    exits = E.level(k + p)
    if stat.mode == BRANCH:
        if len(exits) >= 2:
            return "(Z+θZ)^∞ with coordinatewise cone"
        return generic
    assert stat.mode == REPEAT
    c = E.weight(exits[0]) // E.weight(E.level(k)[0])
    widths = {len(E.level(n)) for n in range(k, k + p + 1)}
    if widths == {1}:
        w = E.weight(E.level(k)[0])
        if c == 1:
            return f"(1/{w})Z+θZ"
        return f"Z[1/{_radical(c)}]+θZ" if _radical(c * w) == _radical(c) else generic
    if _is_complete_block(E, k, k + p):
        t = widths.pop() ** p
        return f"Z[1/{_radical(t * c)}]+Z[θ/{_radical(t)}]"
    return generic


@dataclass(frozen=True)
class Simple:
    level: int


@dataclass(frozen=True)
class NotSimple:
    evidence: tuple


@dataclass(frozen=True)
class SimplicityUnknown:
    reason: str


def simplicity(E, depth):
    """Simple iff E is cofinal; undecided cofinality stays undecided."""
    verdict = cofinality(E, depth)
    if isinstance(verdict, CofinalWitnessed):
        return Simple(verdict.n)
    if isinstance(verdict, NotCofinalWitnessed):
        return NotSimple(verdict.evidence)
    return SimplicityUnknown(verdict.reason)
