# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Cofinality of Bratteli diagrams.

Two vertices on the same level are compared through their descendant sets: v' is absorbed by v
after t steps when every vertex reachable from v' in t steps is also reachable from v.
Comparing same-level pairs suffices, since any pair can be moved to a common level along edges.
"""
import logging
from dataclasses import dataclass

from ..errors import PreconditionError
from .diagram import BRANCH

logger = logging.getLogger("Bratteli")  # pylint: disable=invalid-name


@dataclass(frozen=True)
class CofinalWitnessed:
    """Every same-level pair (v, v') satisfies s(v'E^(n-1)) within s(vE^*)."""

    n: int


@dataclass(frozen=True)
class NotCofinalWitnessed:
    """Two vertices whose descendant sets never absorb each other."""

    evidence: tuple


@dataclass(frozen=True)
class Unknown:
    reason: str


def _children(E, level, indices):
    data = E.level_data(level + 1)
    return frozenset(src for src, rng in data.down if rng in indices)


def _absorb_steps(E, level, v, v_prime, horizon):
    """Smallest t with s(v'E^t) contained in s(vE^t), or None if it never happens.

    ``horizon`` is the last level that may be inspected (None for stationary diagrams, where
    the search stops once a (phase, sets) state repeats).
    """
    stat = E.stationary if E.is_stationary else None
    reach, reach_prime = frozenset([v]), frozenset([v_prime])
    seen = set()
    steps = 0
    while True:
        if reach_prime <= reach:
            return steps
        if stat is not None and level >= stat.start_level:
            key = ((level - stat.start_level) % stat.period, reach, reach_prime)
            if key in seen:
                return None
            seen.add(key)
        if horizon is not None and level >= horizon:
            return None
        reach, reach_prime = _children(E, level, reach), _children(E, level, reach_prime)
        level += 1
        steps += 1


def cofinality(E, depth):
    """Decide cofinality, exactly for stationary diagrams and by bounded search otherwise.

    Parameters
    ----------
    E: WeightedBratteli
        A valid diagram.

    depth: int
        Same-level pairs are taken from levels 1..depth of a non-stationary diagram; the
        search may look ahead to the last given level.

    Returns
    -------
    verdict: Union[CofinalWitnessed, NotCofinalWitnessed, Unknown]
        The witnessed span n is one more than the largest number of absorption steps.
    """
    if E.is_stationary:
        stat = E.stationary
        exit_level = E.level(stat.start_level + stat.period)
        if stat.mode == BRANCH and len(exit_level) > 1:
            # Every exit vertex roots its own copy of the block, so the copies never meet.
            evidence = (E.name(exit_level[0]), E.name(exit_level[1]))
            logger.debug("Branching block: %s and %s have disjoint descendants", *evidence)
            return NotCofinalWitnessed(evidence)
        last_level, horizon = stat.start_level + stat.period, None
    else:
        if depth > E.num_levels:
            raise PreconditionError(
                f"depth {depth} exceeds the {E.num_levels} levels of a non-stationary diagram"
            )
        last_level, horizon = depth, E.num_levels

    span = 0
    for level in range(1, last_level + 1):
        size = len(E.level(level))
        for v in range(size):
            for v_prime in range(size):
                steps = _absorb_steps(E, level, v, v_prime, horizon)
                if steps is None:
                    names = (E.name(E.level(level)[v]), E.name(E.level(level)[v_prime]))
                    if horizon is None:
                        return NotCofinalWitnessed(names)
                    logger.warning("Cofinality undecided for %s and %s", *names)
                    return Unknown(f"{names[1]} not absorbed by {names[0]} within the prefix")
                span = max(span, steps)
    return CofinalWitnessed(span + 1)
