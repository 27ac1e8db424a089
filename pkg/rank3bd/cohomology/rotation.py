# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""The rotation cocycles c_θ(m, n) = exp(2πi θ m_2 n_1) on Z^k and their pullbacks d_* c_θ."""
from ..arith import CirclePoint
from ..errors import PreconditionError
from .cochain import Cochain, CircleTheta, composable_tuples, is_degenerate


class RotationCocycle:
    """c_θ on Z^k in exponent form: c_θ(m, n) = (0, m_2 n_1) as a CirclePoint."""

    def __init__(self, spec, k=2):
        if k < 2:
            raise PreconditionError(f"the rotation cocycle needs k >= 2, got {k}")
        self.spec = spec
        self.k = k

    def __call__(self, m, n):
        if len(m) != self.k or len(n) != self.k:
            raise PreconditionError(f"degrees must have length {self.k}")
        return CirclePoint(0, m[1] * n[0])

    def __repr__(self):
        return f"RotationCocycle(theta={self.spec}, k={self.k})"

    def pullback(self, graph):
        """d_* c_θ: (μ, ν) -> c_θ(d(μ), d(ν)) on the interior pairs of a rank-k graph."""
        if graph.rank != self.k:
            raise PreconditionError(f"graph has rank {graph.rank}, the cocycle rank {self.k}")
        values = {
            (mu, nu): self(graph.d(mu), graph.d(nu))
            for mu, nu in composable_tuples(graph, 2)
            if not is_degenerate(graph, (mu, nu))
        }
        return Cochain(graph, 2, CircleTheta(), values)


def rotation_cocycle(spec, k=2):
    return RotationCocycle(spec, k)
