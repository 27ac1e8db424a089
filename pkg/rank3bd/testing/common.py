# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Common utilities for testing."""
# pylint: disable=too-many-locals, invalid-name
import functools
import itertools
import logging
import os
import random
from math import gcd
from pathlib import Path
from tempfile import TemporaryDirectory

import numpy as np

from .. import env_vars
from ..bratteli import WeightedBratteli, parse_diagram
from ..kgraph import degree as dg
from ..utils.cache import Cache, cache

DATA_DIR = Path(__file__).parent.parent / "data"

__all__ = [
    "DATA_DIR",
    "seeded_rng",
    "with_seed",
    "with_temp_cache",
    "load_example",
    "random_diagram",
    "brute_force_paths",
    "brute_force_min_common_ext",
    "brute_force_boundary_paths",
    "brute_force_morphism_count",
]


logger = logging.getLogger("Testing")  # pylint: disable=invalid-name

# Seeds of the with_seed tests currently running, innermost last.
_active_seeds = []


def _fresh_seed():
    env_seed = os.environ.get(env_vars.SEED)
    if env_seed:
        return int(env_seed), True
    return int(np.random.SeedSequence().entropy % 2**31), False


def seeded_rng():
    """A new numpy Generator seeded like the enclosing ``with_seed`` test.

    Every call restarts the same stream, so a test should draw one Generator and pass it on.
    """
    if not _active_seeds:
        raise RuntimeError("seeded_rng() needs an enclosing @with_seed() test")
    return np.random.default_rng(_active_seeds[-1])


def with_seed(seed=None):
    """Run a test with every random source seeded from one number.

    The seed is ``seed`` when given, else ``$RANK3BD_SEED`` when set, else fresh entropy. The
    global numpy state and ``random`` are seeded with it and ``seeded_rng()`` derives from it.
    A failing test logs the seed together with the environment variable that replays it.

    .. code-block:: python

        @with_seed()
        def test_random_diagrams():
            rng = seeded_rng()
            ...
    """

    def test_helper(orig_test):
        @functools.wraps(orig_test)
        def test_new(*args, **kwargs):
            if seed is not None:
                this_seed, pinned = seed, True
            else:
                this_seed, pinned = _fresh_seed()
            saved_state = np.random.get_state()
            np.random.seed(this_seed)
            random.seed(this_seed)
            _active_seeds.append(this_seed)
            level = logging.INFO if pinned else logging.DEBUG
            logger.log(level, "%s: seed %d", orig_test.__name__, this_seed)
            try:
                return orig_test(*args, **kwargs)
            except BaseException:
                logger.warning(
                    "%s failed with seed %d; rerun with %s=%d",
                    orig_test.__name__,
                    this_seed,
                    env_vars.SEED,
                    this_seed,
                )
                raise
            finally:
                _active_seeds.pop()
                np.random.set_state(saved_state)

        return test_new

    return test_helper


def with_temp_cache(orig_test):
    """
    A decorator for test functions to use temporary cache folder.
    NOTES: This swaps the global cache, so tests using it must not run in parallel.
    """

    @functools.wraps(orig_test)
    def wrapper(*args, **kwargs):
        persist_path = str(cache.persist_path) if cache.enable else ""

        with TemporaryDirectory(prefix="rank3bd_test_") as temp_dir:
            Cache.__init__(cache, temp_dir)
            try:
                ret = orig_test(*args, **kwargs)
            finally:
                Cache.__init__(cache, persist_path)
        return ret

    return wrapper


def load_example(name):
    """One of the packaged example diagrams, e.g. ``load_example("example1")``."""
    with open(DATA_DIR / "examples" / f"{name}.json", "r", encoding="utf-8") as filep:
        return parse_diagram(filep.read())


def random_diagram(rng, max_levels=6, max_width=4, max_ratio=2):
    """A random valid weighted Bratteli diagram without a stationary tail.

    Every vertex above level 1 gets a non-empty set of ranges and a weight that is a multiple
    of all their weights; every vertex below the last level is the range of some edge.

    Parameters
    ----------
    rng: numpy.random.Generator
        Source of randomness.

    max_levels: int
        The diagram has between 2 and max_levels levels.

    max_width: int
        Maximum number of vertices per level.

    max_ratio: int
        Extra factor applied on top of the lcm of the range weights.
    """
    num_levels = int(rng.integers(2, max_levels + 1))
    levels, edges = [], []
    width = int(rng.integers(1, max_width + 1))
    levels.append([(f"v1_{i}", int(rng.integers(1, 3))) for i in range(width)])
    for n in range(2, num_levels + 1):
        below = levels[-1]
        width = int(rng.integers(1, max_width + 1))
        ranges = []
        for _ in range(width):
            size = int(rng.integers(1, min(2, len(below)) + 1))
            ranges.append(set(int(x) for x in rng.choice(len(below), size=size, replace=False)))
        for idx in range(len(below)):
            if not any(idx in r for r in ranges):
                ranges[int(rng.integers(0, width))].add(idx)
        level = []
        for i, targets in enumerate(ranges):
            lcm = 1
            for t in targets:
                lcm = lcm * below[t][1] // gcd(lcm, below[t][1])
            name = f"v{n}_{i}"
            level.append((name, lcm * int(rng.integers(1, max_ratio + 1))))
            edges.extend((name, below[t][0]) for t in sorted(targets))
        levels.append(level)
    return WeightedBratteli(levels, edges)


# ----------------------------------------------------------------------
# Brute-force oracles on truncated k-graphs
# ----------------------------------------------------------------------
def brute_force_paths(graph, v, degree):
    """vΛ^degree rebuilt by composing edges colour by colour.

    Every morphism of degree n factors as e_1-edges, then e_2-edges and so on, so composing
    all such edge strings from v gives vΛ^n without consulting the factorisation table.
    """
    degree = tuple(degree)
    current = {v}
    for i, count in enumerate(degree):
        for _ in range(count):
            grown = set()
            for lam in current:
                for edge in graph.edges(i):
                    if graph.r(edge) == graph.s(lam):
                        grown.add(graph.compose(lam, edge))
            current = grown
    return current


def brute_force_min_common_ext(graph, lam, mu):
    """Λ^min(λ, μ) by exhaustive search over all pairs of morphisms."""
    target = dg.join(graph.d(lam), graph.d(mu))
    result = set()
    for alpha, beta in itertools.product(graph, graph):
        if graph.r(alpha) != graph.s(lam) or graph.r(beta) != graph.s(mu):
            continue
        if dg.add(graph.d(lam), graph.d(alpha)) != target:
            continue
        if dg.add(graph.d(mu), graph.d(beta)) != target:
            continue
        if graph.compose(lam, alpha) == graph.compose(mu, beta):
            result.add((alpha, beta))
    return result


def brute_force_boundary_paths(graph, v, n):
    """vΛ^{<=n}: paths below n that no non-trivial morphism extends within n."""
    n = tuple(n)
    result = set()
    for lam in graph.with_range(v):
        if not dg.leq(graph.d(lam), n):
            continue
        extendable = any(
            graph.r(nu) == graph.s(lam)
            and graph.d(nu) != dg.zero(graph.rank)
            and dg.leq(dg.add(graph.d(lam), graph.d(nu)), n)
            for nu in graph
        )
        if not extendable:
            result.add(lam)
    return result


def brute_force_morphism_count(E, levels, bound):
    """|Λ_E| on levels 1..levels with degree <= bound, counted from the diagram alone.

    A morphism is a range (v, i), a rank-2 degree, an upward path from v and a source index;
    the source indices compatible with (v, i) number w(end) / w(v).
    """
    b1, b2, b3 = bound

    def ends(v, length):
        yield v
        if length == 0 or v.level >= levels:
            return
        for e in E.r_edges(v):
            yield from ends(e.source, length - 1)

    total = 0
    for n in range(1, levels + 1):
        for v in E.level(n):
            for end in ends(v, b3):
                total += E.weight(v) * (E.weight(end) // E.weight(v))
    return total * (b1 + 1) * (b2 + 1)
