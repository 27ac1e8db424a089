# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Equality, positivity and interpolation in the inductive limit of the level groups.

The limit order is the inductive-limit cone: a class is positive iff some push of it is
coordinatewise nonnegative. Both questions are answered by bounded search with explicit
verdicts; for stationary diagrams a stabilized kernel chain certifies distinctness forever.
"""
# pylint: disable=invalid-name
import logging
from dataclasses import dataclass

import numpy as np
from sympy import Matrix

from ..arith import theta_sign
from ..bratteli.diagram import REPEAT
from ..errors import InterpolationError, PreconditionError
from .classes import KZeroClass, zero_class
from .maps import flatten, matrix_A, push_A

logger = logging.getLogger("KTheory")  # pylint: disable=invalid-name


@dataclass(frozen=True)
class Equal:
    level: int


@dataclass(frozen=True)
class DistinctSoFar:
    level: int


@dataclass(frozen=True)
class DistinctForever:
    pass


@dataclass(frozen=True)
class PositiveWitnessed:
    level: int


@dataclass(frozen=True)
class NotPositiveSoFar:
    level: int


@dataclass(frozen=True)
class Zero:
    pass


def _common_level(*classes):
    level = max(x.level for x in classes)
    return level, [push_A(x, level) for x in classes]


def _kernel_certificate(E, difference):
    """Whether the difference provably never vanishes on a stationary repeat diagram.

    From level n0 >= k on, A_{n0+p-1} ... A_{n0} is the same matrix M for every period. The
    kernels of M^j increase and stop at the first j0 with rank M^j0 = rank M^(j0+1); a
    vector outside ker M^j0 survives every later push.
    """
    stat = E.stationary
    n0 = max(difference.level, stat.start_level)
    d = flatten(push_A(difference, n0))
    M = np.identity(len(d), dtype=object)
    for n in range(n0, n0 + stat.period):
        M = matrix_A(E, n).dot(M)
    M = Matrix(M.tolist())
    power = Matrix.eye(M.shape[0])
    while power.rank() != (M * power).rank():
        power = M * power
    image = power * Matrix(d.tolist())
    return any(x != 0 for x in image)


def k0_equal(x, y, max_level):
    """Decide x = y in the limit.

    Returns
    -------
    verdict: Union[Equal, DistinctSoFar, DistinctForever]
        Equal(m) for the first level m <= max_level where the pushes agree.
    """
    E = x.diagram
    level, (x, y) = _common_level(x, y)
    for m in range(level, max(level, max_level) + 1):
        if m > level and not E.has_level(m):
            break
        if push_A(x, m) == push_A(y, m):
            return Equal(m)
    if E.is_stationary and E.stationary.mode == REPEAT and _kernel_certificate(E, x - y):
        return DistinctForever()
    return DistinctSoFar(max_level)


def is_nonnegative(x, spec):
    """Every coordinate value is >= 0."""
    return all(theta_sign(value, spec) >= 0 for value in x.values())


def k0_positive(x, spec, max_level):
    """Decide whether x lies in the positive cone, searching pushes up to ``max_level``.

    Returns
    -------
    verdict: Union[PositiveWitnessed, NotPositiveSoFar, Zero]
    """
    E = x.diagram
    for m in range(x.level, max(x.level, max_level) + 1):
        if m > x.level and not E.has_level(m):
            break
        y = push_A(x, m)
        if y.is_zero():
            return Zero()
        if is_nonnegative(y, spec):
            return PositiveWitnessed(m)
    return NotPositiveSoFar(max_level)


def _leq(a, b, spec):
    return is_nonnegative(b - a, spec)


def riesz_interpolate(lower, upper, spec, max_level=None):
    """A class c with a <= c <= b for every a in ``lower`` and b in ``upper``.

    All classes are pushed to a common level, and further up until every b - a is
    coordinatewise nonnegative; c is then the coordinatewise maximum of the lower classes,
    each coordinate group being a totally ordered subgroup of the reals. An empty ``lower``
    gives the zero class at the common level.
    """
    classes = list(lower) + list(upper)
    if not classes:
        raise PreconditionError("riesz_interpolate needs at least one class")
    E = classes[0].diagram
    level, pushed = _common_level(*classes)
    if max_level is None:
        max_level = level + 8
    while True:
        lows, highs = pushed[: len(lower)], pushed[len(lower) :]
        if all(_leq(a, b, spec) for a in lows for b in highs):
            break
        if level >= max_level or not E.has_level(level + 1):
            raise InterpolationError(f"some lower class is not below some upper class by level {level}")
        level += 1
        pushed = [push_A(x, level) for x in pushed]

    if not lows:
        return zero_class(E, level)
    coords = []
    for idx in range(len(lows[0].coords)):
        best = lows[0]
        for a in lows[1:]:
            if theta_sign(a.value(idx) - best.value(idx), spec) > 0:
                best = a
        coords.append(best.coords[idx])
    logger.debug("Interpolated at level %d", level)
    return KZeroClass(level, tuple(coords), E)
