# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Connecting maps A_n (on K_0) and B_n (on K_1), the intertwiner T_n and the θ-isomorphism.

Level-n coordinates are flattened as [p_0, q_0, p_1, q_1, ...] in vertex order. A_n and B_n
act on column vectors: they have 2|E^0_{n+1}| rows and 2|E^0_n| columns, with one 2x2 block
per edge e at (s(e), r(e)).
"""
# pylint: disable=invalid-name
import logging

import numpy as np

from ..errors import PreconditionError
from .classes import KOneClass, KZeroClass

logger = logging.getLogger("KTheory")  # pylint: disable=invalid-name

T_BLOCK = np.array([[0, 1], [1, 1]], dtype=object)


def block_A(l):
    """diag(l, 1): p/w(v) + qθ = lp/w(u) + qθ when w(u) = l w(v)."""
    return np.array([[l, 0], [0, 1]], dtype=object)


def block_B(l):
    return np.array([[1, 1 - l], [0, l]], dtype=object)


def _connecting(E, n, block):
    rows, cols = len(E.level(n + 1)), len(E.level(n))
    matrix = np.zeros((2 * rows, 2 * cols), dtype=object)
    for e in E.edges_between(n):
        u, v = e.source.index, e.range.index
        matrix[2 * u : 2 * u + 2, 2 * v : 2 * v + 2] += block(E.ratio(e))
    return matrix


def matrix_A(E, n):
    """A_n: K_0 at level n -> K_0 at level n+1."""
    return _connecting(E, n, block_A)


def matrix_B(E, n):
    """B_n: K_1 at level n -> K_1 at level n+1."""
    return _connecting(E, n, block_B)


def matrix_T(E, n):
    """T_n = ⊕_v [[0, 1], [1, 1]]."""
    size = len(E.level(n))
    matrix = np.zeros((2 * size, 2 * size), dtype=object)
    for idx in range(size):
        matrix[2 * idx : 2 * idx + 2, 2 * idx : 2 * idx + 2] = T_BLOCK
    return matrix


def flatten(x):
    return np.array([c for pair in x.coords for c in pair], dtype=object)


def unflatten(vector):
    return tuple((int(vector[2 * i]), int(vector[2 * i + 1])) for i in range(len(vector) // 2))


def _push(x, target, matrix):
    if target < x.level:
        raise PreconditionError(f"cannot push a level-{x.level} class down to level {target}")
    vector = flatten(x)
    for n in range(x.level, target):
        vector = matrix(x.diagram, n).dot(vector)
    return type(x)(target, unflatten(vector), x.diagram)


def push_A(x, target):
    """The image of a K_0 class at level ``target``."""
    if not isinstance(x, KZeroClass):
        raise PreconditionError(f"push_A needs a K_0 class, got {x}")
    return _push(x, target, matrix_A)


def push_B(x, target):
    """The image of a K_1 class at level ``target``."""
    if not isinstance(x, KOneClass):
        raise PreconditionError(f"push_B needs a K_1 class, got {x}")
    return _push(x, target, matrix_B)


def push(x, target):
    return push_A(x, target) if isinstance(x, KZeroClass) else push_B(x, target)


def theta_iso(x):
    """h_0 ∘ θ ∘ h_1^{-1}: (a, b)δ_v -> b/w(v) + (a + b)θ, i.e. (p, q) = (b, a + b)."""
    if not isinstance(x, KOneClass):
        raise PreconditionError(f"theta_iso needs a K_1 class, got {x}")
    return KZeroClass(x.level, tuple((b, a + b) for a, b in x.coords), x.diagram)


def check_intertwiner(E, levels):
    """Check T_{n+1} B_n = A_n T_n blockwise and levelwise for n < levels.

    Returns
    -------
    result: Tuple[bool, Optional[str]]
        (True, None), or (False, the first failing edge or level).
    """
    for n in range(1, levels):
        for e in E.edges_between(n):
            l = E.ratio(e)
            if not np.array_equal(T_BLOCK.dot(block_B(l)), block_A(l).dot(T_BLOCK)):
                return False, f"{E.name(e.source)}->{E.name(e.range)}"
        left = matrix_T(E, n + 1).dot(matrix_B(E, n))
        right = matrix_A(E, n).dot(matrix_T(E, n))
        if not np.array_equal(left, right):
            return False, f"level {n}"
    return True, None


def emit_nonneg_matrices(E, levels):
    """A'_n for n < levels: the transpose of A_n, a q_n x q_{n+1} matrix with q_n = 2|E^0_n|.

    Row vectors of level-n coordinates map to level n+1 by right multiplication, the
    convention of dimension-group inductive systems Z^{q_1} -> Z^{q_2} -> ....
    """
    result = []
    for n in range(1, levels):
        matrix = matrix_A(E, n).T.copy()
        assert all(x >= 0 for x in matrix.flat)
        result.append(matrix)
    return result


def matrix_csv(matrix):
    """Row-major CSV text of an integer matrix."""
    return "".join(",".join(str(int(x)) for x in row) + "\n" for row in matrix)
