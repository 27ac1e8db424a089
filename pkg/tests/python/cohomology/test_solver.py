# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

import itertools
from math import prod

import numpy as np
import pytest

from rank3bd.cohomology import (
    cocycle_unknowns,
    composable_tuples,
    is_cocycle,
    is_degenerate,
    sample_cocycles,
    solution_module,
)
from rank3bd.cohomology.solver import _prime_power_kernel
from rank3bd.errors import PreconditionError
from rank3bd.kgraph import build_cycle, build_torus
from rank3bd.testing import with_seed


def brute_force_cocycle_count(graph, m):
    """Count normalized Z/m-valued 2-cocycles by trying every assignment.

    Degenerate triples hold for every normalized cochain and are skipped.
    """
    column = {tup: idx for idx, tup in enumerate(cocycle_unknowns(graph))}
    checks = []
    for lam, mu, nu in composable_tuples(graph, 3):
        if is_degenerate(graph, (lam, mu, nu)):
            continue
        lam_mu, mu_nu = graph.compose(lam, mu), graph.compose(mu, nu)
        checks.append(
            (
                column.get((lam, mu)),
                column.get((lam_mu, nu)),
                column.get((mu, nu)),
                column.get((lam, mu_nu)),
            )
        )

    def value(x, idx):
        return 0 if idx is None else x[idx]

    count = 0
    for x in itertools.product(range(m), repeat=len(column)):
        if all(
            (value(x, a) + value(x, b) - value(x, c) - value(x, d)) % m == 0
            for a, b, c, d in checks
        ):
            count += 1
    return count


def test_rank_one_torus():
    graph = build_torus(1, (2,))
    module = solution_module(graph, 12, use_cache=False)
    assert len(module.unknowns) == 1
    assert module.orders == [4, 3]
    assert module.generators.shape == (1, 2)


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_module_size_matches_brute_force(m):
    graph = build_torus(2, (2, 1))
    module = solution_module(graph, m, use_cache=False)
    assert len(module.unknowns) == 7
    assert prod(module.orders) == brute_force_cocycle_count(graph, m)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2)])
@with_seed()
def test_prime_power_kernel(p, k):
    q = p**k
    matrix = np.random.randint(0, q, size=(2, 3)).tolist()
    gens, orders = _prime_power_kernel(matrix, p, k)
    A = np.array(matrix, dtype=object)
    for g in gens:
        assert all(x % q == 0 for x in A.dot(g))
    kernel = [
        x for x in itertools.product(range(q), repeat=3) if all(v % q == 0 for v in A.dot(x))
    ]
    span = set()
    for coeffs in itertools.product(*[range(o) for o in orders]):
        vec = sum((c * g for c, g in zip(coeffs, gens)), np.zeros(3, dtype=object))
        span.add(tuple(int(v) % q for v in vec))
    assert len(span) == prod(orders) == len(kernel)


def test_prime_power_kernel_non_unit():
    gens, orders = _prime_power_kernel([[2]], 2, 2)
    assert [list(g) for g in gens] == [[2]] and orders == [2]
    gens, orders = _prime_power_kernel([[2, 4], [0, 0]], 2, 3)
    assert orders == [2, 8]
    assert [list(g) for g in gens] == [[4, 0], [6, 1]]


@with_seed()
def test_samples_are_cocycles():
    seed = np.random.randint(1000)
    graph = build_cycle(2, (2, 2))
    samples, ngens = sample_cocycles(graph, 12, 5, seed=seed, use_cache=False)
    assert len(samples) == 5 and ngens > 0
    for c in samples:
        assert is_cocycle(c) == (True, None)
        assert c.is_normalized()
    again, _ = sample_cocycles(graph, 12, 5, seed=seed, use_cache=False)
    assert [c.values for c in again] == [c.values for c in samples]


def test_errors():
    with pytest.raises(PreconditionError):
        solution_module(build_torus(1, (2,)), 1, use_cache=False)


if __name__ == "__main__":
    pytest.main([__file__])
