# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Exact solution of the F-trace equations on levels 1..N.

The unknowns are h(v) for every vertex up to level N; the equations are the F identities
below level N, the optional corner normalization Σ_{v ∈ E^0_1} w(v) h(v) = 1 and any fixed
values. The solution set is an affine space over the rationals, reported as a particular
solution plus generators; nonnegativity stays a list of constraints on it.
"""
# pylint: disable=invalid-name
import logging
from fractions import Fraction

import sympy

from ..errors import PreconditionError, TraceSolveError
from ..utils import timed
from .trace import GraphTrace

logger = logging.getLogger("Traces")  # pylint: disable=invalid-name


def _to_fraction(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


class AffineTraceSpace:
    """{particular + Σ_t s_t generator_t}, with every vector given on ``variables``."""

    def __init__(self, diagram, variables, particular, generators, normalization):
        self.diagram = diagram
        self.variables = variables
        self.particular = particular
        self.generators = generators
        self.normalization = normalization

    @property
    def dimension(self):
        return len(self.generators)

    @property
    def unique(self):
        return not self.generators

    def determined(self):
        """Vertices whose value does not depend on the free parameters."""
        return [v for v in self.variables if all(gen[v] == 0 for gen in self.generators)]

    def point(self, params=None):
        """The GraphTrace at the given parameter values (all zero by default)."""
        params = list(params or [0] * self.dimension)
        if len(params) != self.dimension:
            raise PreconditionError(f"expected {self.dimension} parameters, got {len(params)}")
        values = {}
        for v in self.variables:
            values[v] = self.particular[v] + sum(
                (Fraction(s) * gen[v] for s, gen in zip(params, self.generators)), Fraction(0)
            )
        return GraphTrace("F", values, self.normalization)

    def constraints(self):
        """The nonnegativity constraints h(v) >= 0 as (vertex, constant, coefficients)."""
        return [
            (v, self.particular[v], tuple(gen[v] for gen in self.generators))
            for v in self.variables
        ]

    def __repr__(self):
        return f"AffineTraceSpace(variables={len(self.variables)}, dimension={self.dimension})"


@timed("traces.solve")
def solve_traces(F, N, normalize=True, fixed=None):
    """Solve the trace equations of F on levels 1..N.

    Parameters
    ----------
    F: Union[MultiplicityBratteli, WeightedBratteli]
        The diagram; weights are taken from the underlying weighted diagram.

    N: int
        The last level; its values are free apart from fixed values.

    normalize: bool
        Add Σ_{v ∈ E^0_1} w(v) h(v) = 1.

    fixed: Optional[Dict[Vertex, Fraction]]
        Extra constraints h(v) = value.

    Returns
    -------
    space: AffineTraceSpace
    """
    if N < 1:
        raise PreconditionError(f"N must be >= 1, got {N}")
    E = getattr(F, "weighted", F)
    variables = [v for n in range(1, N + 1) for v in E.level(n)]
    column = {v: idx for idx, v in enumerate(variables)}
    rows, rhs = [], []
    for n in range(1, N):
        for v in E.level(n):
            row = [0] * len(variables)
            row[column[v]] = 1
            for e in E.r_edges(v):
                row[column[e.source]] -= E.ratio(e)
            rows.append(row)
            rhs.append(0)
    if normalize:
        row = [0] * len(variables)
        for v in E.level(1):
            row[column[v]] = E.weight(v)
        rows.append(row)
        rhs.append(1)
    for v, value in (fixed or {}).items():
        if v not in column:
            raise PreconditionError(f"{v} is not on levels 1..{N}")
        row = [0] * len(variables)
        row[column[v]] = 1
        rows.append(row)
        rhs.append(sympy.Rational(str(Fraction(value))))

    if not rows:
        rows, rhs = [[0] * len(variables)], [0]
    A = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError as err:
        raise TraceSolveError(f"the trace equations up to level {N} have no solution") from err

    params = list(params)
    zero = {s: 0 for s in params}
    particular = {v: _to_fraction(solution[column[v]].subs(zero)) for v in variables}
    generators = []
    for s in params:
        gen = {v: _to_fraction(sympy.diff(solution[column[v]], s)) for v in variables}
        generators.append(gen)
    logger.info("Trace space up to level %d has dimension %d", N, len(generators))
    return AffineTraceSpace(
        E, variables, particular, generators, "unit" if normalize else "none"
    )
