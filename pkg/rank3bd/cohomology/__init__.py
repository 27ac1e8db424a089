# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Categorical cohomology of truncated k-graphs."""
from .cochain import (
    Coefficients,
    ZMod,
    Integers,
    CircleTheta,
    Cochain,
    is_interior,
    is_degenerate,
    composable_tuples,
    delta,
    is_cocycle,
    random_cochain,
    random_coboundary,
    compose_with,
    push_forward,
    restrict,
    dump_cochain,
)
from .solver import SolutionModule, cocycle_unknowns, solution_module, sample_cocycles
from .reduction import (
    projection_pi,
    pullback,
    b_cochain,
    restrict_to_level,
    level_pushforward,
    verify_reduction,
)
from .rotation import RotationCocycle, rotation_cocycle
