# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Pairing of F-traces with K_0 classes, zero sets of Λ_E traces and the trace test for
positivity.
"""
# pylint: disable=invalid-name
import logging
from fractions import Fraction

from ..arith import ThetaReal, theta_sign
from ..kgraph import degree as dg

logger = logging.getLogger("Traces")  # pylint: disable=invalid-name


def k0_pairing(h, x):
    """Σ_v (p_v/w(v) + q_v θ) w(v) h(v) as a ThetaReal.

    The vertex class (1/w(v))δ_v pairs to h(v) and (0,1)δ_v to θ w(v) h(v).
    """
    E = x.diagram
    a, b = Fraction(0), Fraction(0)
    for v, (p, q) in zip(x.vertices(), x.coords):
        hv = h(v)
        a += p * hv
        b += q * E.weight(v) * hv
    return ThetaReal(a, b)


def k0_positive_by_trace(x, h, spec):
    """Heuristic positivity test through one strictly positive trace.

    A negative pairing proves x is not positive. A positive pairing only suggests it; the
    cone search of ``k0_positive`` stays authoritative. Returns True, False or None.
    """
    if not all(h(v) > 0 for v in x.vertices()):
        return None
    sign = theta_sign(k0_pairing(h, x), spec)
    if sign < 0:
        return False
    if sign > 0:
        return True
    return None


def zero_set(g, graph):
    """H_g = {v : g(v) = 0} and whether it is hereditary and saturated within the truncation.

    Hereditary: every morphism with range in H has its source in H. Saturated: a vertex whose
    e_i-edges all have sources in H, for some i with vΛ^{e_i} nonempty, lies in H.
    """
    H = frozenset(v for v in graph.vertices if g(v) == 0)
    hereditary = all(graph.s(lam) in H for lam in graph if graph.r(lam) in H)
    saturated = True
    for v in graph.vertices:
        if v in H:
            continue
        for i in range(graph.rank):
            edges = graph.with_range(v, dg.unit(graph.rank, i))
            if edges and all(graph.s(lam) in H for lam in edges):
                logger.debug("Zero set of %d vertices is not saturated at %s", len(H), v)
                saturated = False
    return H, hereditary, saturated
