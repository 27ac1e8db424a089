# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""The projection of a covering tower onto its first level, and the reduction of a 2-cocycle on
the tower to the pullback of its restriction to Λ_1 modulo a coboundary.
"""
# pylint: disable=invalid-name
import logging

from ..errors import PreconditionError
from ..utils import timed
from .cochain import Cochain, compose_with, composable_tuples, delta, is_cocycle, restrict

logger = logging.getLogger("Cohomology")  # pylint: disable=invalid-name


def projection_pi(tower, lam):
    """π(λ): the Λ_1 factor of ξ_{r(λ)} λ = π(λ) β with β of pure e_3 degree."""
    graph = tower.graph
    xi = tower.xi(graph.r(lam))
    p, q, _ = graph.d(lam)
    head, _ = graph.factorize(graph.compose(xi, lam), (p, q, 0))
    return head


def pullback(c1, tower, check=True):
    """π_* c_1: (λ, μ) -> c_1(π(λ), π(μ)) on every interior pair of the tower.

    Parameters
    ----------
    c1: Cochain
        A 2-cocycle on ``tower.level_graph(1)``.

    tower: CoveringTower
        The tower.

    check: bool
        Verify the cocycle identity for c_1 first.
    """
    if c1.arity != 2:
        raise PreconditionError(f"pullback needs a 2-cochain, got arity {c1.arity}")
    if check:
        ok, witness = is_cocycle(c1)
        if not ok:
            raise PreconditionError(f"c_1 is not a cocycle, see {witness}")
    graph = tower.graph
    pi = {lam: projection_pi(tower, lam) for lam in graph}
    values = {(lam, mu): c1(pi[lam], pi[mu]) for lam, mu in composable_tuples(graph, 2)}
    return Cochain(graph, 2, c1.coefficients, values)


def b_cochain(c, tower):
    """b(λ) = c(ξ_{r(λ)}, λ) - c(π(λ), ξ_{s(λ)})."""
    graph, A = tower.graph, c.coefficients
    values = {}
    for lam in graph:
        first = c(tower.xi(graph.r(lam)), lam)
        second = c(projection_pi(tower, lam), tower.xi(graph.s(lam)))
        values[(lam,)] = A.sub(first, second)
    return Cochain(graph, 1, A, values)


def restrict_to_level(c, tower, n):
    """c|Λ_n."""
    return restrict(c, tower.level_graph(n))


def level_pushforward(c1, tower, n):
    """(p_{1,n})_* c_1 on Λ_n."""
    return compose_with(c1, tower.level_graph(n), tower.p_1n)


@timed("cocycle.reduction")
def verify_reduction(c, tower):
    """Check c - δ^1 b = π_*(c|Λ_1) on every interior pair of the tower.

    Returns
    -------
    result: Tuple[bool, Optional[tuple]]
        (True, None), or (False, the first pair where the two sides differ).
    """
    b = b_cochain(c, tower)
    left = c - delta(b)
    right = pullback(restrict_to_level(c, tower, 1), tower, check=False)
    witness = left.first_difference(right)
    if witness is not None:
        logger.debug("Reduction fails on %s", witness)
        return False, witness
    return True, None
