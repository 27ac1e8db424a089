# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Exact arithmetic: rationals, numbers a + b*theta and the theta circle group."""
from .theta import (
    ThetaSpec,
    ContinuedFraction,
    QuadraticSurd,
    ThetaReal,
    parse_theta,
    parse_rational,
    theta_bounds,
    theta_sign,
)
from .circle import CirclePoint, circle_add
