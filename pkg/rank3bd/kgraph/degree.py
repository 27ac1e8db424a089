# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Degree vectors in N^k, represented as tuples of non-negative integers."""
import itertools

from ..errors import ParseError


def parse_degree(text):
    """Parse ``2,2,2`` into (2, 2, 2)."""
    try:
        degree = tuple(int(x) for x in text.split(","))
    except ValueError as err:
        raise ParseError(f"Malformed degree vector: {text!r}") from err
    if not degree or any(x < 0 for x in degree):
        raise ParseError(f"Degree vector must be non-empty and non-negative: {text!r}")
    return degree


def zero(k):
    return (0,) * k


def unit(k, i):
    """e_i, with i counted from 0."""
    return tuple(1 if j == i else 0 for j in range(k))


def add(m, n):
    return tuple(a + b for a, b in zip(m, n))


def sub(m, n):
    assert leq(n, m), f"{n} is not below {m}"
    return tuple(a - b for a, b in zip(m, n))


def leq(m, n):
    """The coordinatewise partial order."""
    return all(a <= b for a, b in zip(m, n))


def join(m, n):
    """m v n, the coordinatewise maximum."""
    return tuple(max(a, b) for a, b in zip(m, n))


def below(n):
    """All degrees m <= n, lexicographically."""
    return list(itertools.product(*(range(x + 1) for x in n)))


def total(m):
    return sum(m)
