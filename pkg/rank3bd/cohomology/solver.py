# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Exact solution of the 2-cocycle equations over Z/mZ on a truncated k-graph.

The unknowns are the values on non-degenerate interior pairs; there is one equation
x(λ,μ) + x(λμ,ν) - x(μ,ν) - x(λ,μν) = 0 per non-degenerate interior triple. The system is
first reduced by sparse elimination on unit pivots. The residual system is solved densely
over each prime power q | m by a Smith-style elimination, and the generators are lifted to
Z/mZ with the CRT idempotents. The result is a list of generators g_t with orders o_t such
that the solution module is the direct sum of the cyclic groups <g_t>.
"""
# pylint: disable=invalid-name, too-many-locals
import logging
from collections import defaultdict, namedtuple
from math import gcd

import numpy as np
from sympy import factorint

from ..errors import PreconditionError
from ..utils import counter, timed
from ..utils.cache import cache
from .cochain import Cochain, ZMod, composable_tuples, is_degenerate

logger = logging.getLogger("Cohomology")  # pylint: disable=invalid-name

SolutionModule = namedtuple("SolutionModule", ["unknowns", "orders", "generators", "modulus"])


def cocycle_unknowns(graph):
    """Non-degenerate interior pairs in enumeration order."""
    return [tup for tup in composable_tuples(graph, 2) if not is_degenerate(graph, tup)]


def cocycle_equations(graph, column):
    """Sparse rows {column: coefficient} of the cocycle identity, zero rows dropped."""
    rows = []
    for lam, mu, nu in composable_tuples(graph, 3):
        if is_degenerate(graph, (lam, mu, nu)):
            continue
        row = defaultdict(int)
        row[column[(lam, mu)]] += 1
        row[column[(graph.compose(lam, mu), nu)]] += 1
        row[column[(mu, nu)]] -= 1
        row[column[(lam, graph.compose(mu, nu))]] -= 1
        row = {c: a for c, a in row.items() if a != 0}
        if row:
            rows.append(row)
    return rows


def _sparse_unit_elimination(rows, m):
    """Eliminate on unit pivots, shortest rows first.

    Returns
    -------
    pivots: List[Tuple[int, Dict[int, int]]]
        (column, row) in elimination order; each row has coefficient 1 at its column and no
        column pivoted before it.

    residual: List[Dict[int, int]]
        Rows without a unit entry, free of every pivot column.
    """
    active = {}
    by_column = defaultdict(set)
    for idx, row in enumerate(rows):
        row = {c: a % m for c, a in row.items() if a % m}
        if row:
            active[idx] = row
            for c in row:
                by_column[c].add(idx)

    pivots = []
    while active:
        best = None
        for idx, row in active.items():
            if best is not None and len(row) >= len(active[best[0]]):
                continue
            unit = next((c for c in sorted(row) if gcd(row[c], m) == 1), None)
            if unit is not None:
                best = (idx, unit)
        if best is None:
            break
        idx, col = best
        row = active.pop(idx)
        for c in row:
            by_column[c].discard(idx)
        inv = pow(row[col], -1, m)
        row = {c: (a * inv) % m for c, a in row.items()}
        for other in list(by_column[col]):
            target = active[other]
            factor = target[col]
            for c, a in row.items():
                value = (target.get(c, 0) - factor * a) % m
                if value:
                    if c not in target:
                        by_column[c].add(other)
                    target[c] = value
                elif c in target:
                    del target[c]
                    by_column[c].discard(other)
            if not target:
                del active[other]
        pivots.append((col, row))
    counter("cocycle.unit_pivots", len(pivots))
    return pivots, list(active.values())


def _valuation(x, p, k):
    """v_p of a residue mod p^k, with v_p(0) = k."""
    if x == 0:
        return k
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _prime_power_kernel(matrix, p, k):
    """Generators of {x : matrix x = 0 mod p^k} with their orders.

    Row and column operations bring the matrix to diagonal form D = P A V with V
    invertible; the kernel of D is spanned by p^(k-e_t) e_t for a diagonal entry of
    valuation e_t and by e_t for the columns past the rank.
    """
    q = p**k
    A = np.array(matrix, dtype=object) % q
    n_rows, n_cols = A.shape
    V = np.identity(n_cols, dtype=object)
    valuations = []
    t = 0
    while t < min(n_rows, n_cols):
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                if A[i, j]:
                    v = _valuation(A[i, j], p, k)
                    if best is None or v < best[0]:
                        best = (v, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        e, i, j = best
        A[[t, i], :] = A[[i, t], :]
        A[:, [t, j]] = A[:, [j, t]]
        V[:, [t, j]] = V[:, [j, t]]
        unit_inv = pow(A[t, t] // p**e, -1, q)
        for r in range(t + 1, n_rows):
            if A[r, t]:
                A[r, :] = (A[r, :] - (A[r, t] // p**e) * unit_inv * A[t, :]) % q
        for c in range(t + 1, n_cols):
            if A[t, c]:
                factor = (A[t, c] // p**e) * unit_inv
                A[:, c] = (A[:, c] - factor * A[:, t]) % q
                V[:, c] = (V[:, c] - factor * V[:, t]) % q
        valuations.append(e)
        t += 1

    generators, orders = [], []
    for idx, e in enumerate(valuations):
        if e > 0:
            generators.append((V[:, idx] * p ** (k - e)) % q)
            orders.append(p**e)
    for idx in range(len(valuations), n_cols):
        generators.append(V[:, idx] % q)
        orders.append(q)
    return generators, orders


@timed("cocycle.solve")
def solution_module(graph, m, use_cache=True):
    """The module Z^2(Λ, Z/mZ) restricted to the truncation, as cyclic generators.

    Parameters
    ----------
    graph: TruncatedKGraph
        Λ.

    m: int
        The modulus, m >= 2.

    use_cache: bool
        Look the generators up in, and store them into, the persistent cache.

    Returns
    -------
    module: SolutionModule
        ``generators`` is an object array of shape (#unknowns, #generators).
    """
    if m < 2:
        raise PreconditionError(f"m must be >= 2, got {m}")
    unknowns = cocycle_unknowns(graph)
    key = ("cocycles", graph.fingerprint(), m)
    if use_cache:
        hit = cache.query(key)
        if hit is not None and len(hit["generators"]) == len(unknowns):
            gens = np.array(hit["generators"], dtype=object).reshape(len(unknowns), len(hit["orders"]))
            return SolutionModule(unknowns, list(hit["orders"]), gens, m)

    column = {tup: idx for idx, tup in enumerate(unknowns)}
    rows = cocycle_equations(graph, column)
    logger.info(
        "Cocycle system on %s over Z/%d: %d unknowns, %d equations",
        graph.name,
        m,
        len(unknowns),
        len(rows),
    )
    pivots, residual = _sparse_unit_elimination(rows, m)
    pivot_cols = {c for c, _ in pivots}
    free_cols = [c for c in range(len(unknowns)) if c not in pivot_cols]
    position = {c: idx for idx, c in enumerate(free_cols)}
    dense = np.zeros((len(residual), len(free_cols)), dtype=object)
    for r, row in enumerate(residual):
        for c, a in row.items():
            dense[r, position[c]] = a

    free_generators, orders = [], []
    for p, k in sorted(factorint(m).items()):
        q = p**k
        cofactor = m // q
        idempotent = (cofactor * pow(cofactor, -1, q)) % m
        gens, ords = _prime_power_kernel(dense, p, k)
        free_generators.extend((g * idempotent) % m for g in gens)
        orders.extend(ords)

    G = np.zeros((len(unknowns), len(orders)), dtype=object)
    for t, g in enumerate(free_generators):
        for idx, c in enumerate(free_cols):
            G[c, t] = g[idx]
    for col, row in reversed(pivots):
        acc = np.zeros(len(orders), dtype=object)
        for c, a in row.items():
            if c != col:
                acc = acc + a * G[c, :]
        G[col, :] = (-acc) % m
    counter("cocycle.generators", len(orders))

    if use_cache:
        cache.commit(key, {"orders": orders, "generators": [[int(x) for x in r] for r in G]})
    return SolutionModule(unknowns, orders, G, m)


def cochain_from_vector(graph, module, vector):
    """The 2-cochain over Z/mZ with the given values on the unknowns."""
    values = {tup: int(x) % module.modulus for tup, x in zip(module.unknowns, vector)}
    return Cochain(graph, 2, ZMod(module.modulus), values)


def sample_cocycles(graph, m, count, seed=0, use_cache=True):
    """Uniform samples from Z^2(Λ, Z/mZ) on the truncation.

    Parameters
    ----------
    graph: TruncatedKGraph
        Λ.

    m: int
        The modulus.

    count: int
        Number of samples.

    seed: int
        Seed of the numpy generator drawing the coefficients.

    Returns
    -------
    result: Tuple[List[Cochain], int]
        The samples and the number of cyclic generators of the solution module.
    """
    module = solution_module(graph, m, use_cache=use_cache)
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(count):
        coeffs = np.array([int(rng.integers(0, o)) for o in module.orders], dtype=object)
        vector = module.generators.dot(coeffs) % m if module.orders else [0] * len(module.unknowns)
        samples.append(cochain_from_vector(graph, module, vector))
    return samples, len(module.orders)
