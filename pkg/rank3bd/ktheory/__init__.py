# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Ordered K-theory of twisted rank-3 Bratteli diagram algebras."""
from .classes import (
    KZeroClass,
    KOneClass,
    zero_class,
    basis_class,
    vertex_class,
    unit_class,
    k1_generators,
    format_class,
    parse_class,
)
from .maps import (
    block_A,
    block_B,
    matrix_A,
    matrix_B,
    matrix_T,
    push_A,
    push_B,
    push,
    theta_iso,
    check_intertwiner,
    emit_nonneg_matrices,
    matrix_csv,
)
from .limits import (
    Equal,
    DistinctSoFar,
    DistinctForever,
    PositiveWitnessed,
    NotPositiveSoFar,
    Zero,
    k0_equal,
    k0_positive,
    is_nonnegative,
    riesz_interpolate,
)
from .summary import (
    representable,
    limit_summary,
    Simple,
    NotSimple,
    SimplicityUnknown,
    simplicity,
)
