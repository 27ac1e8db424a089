# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Weighted Bratteli diagrams."""
from .diagram import (
    Vertex,
    Edge,
    Violation,
    Stationary,
    WeightedBratteli,
    MultiplicityBratteli,
    derived_F,
    validate,
    path_count,
    first_path,
    restrict_to_path,
    level_description,
)
from .io import parse_diagram, load_diagram, dump_diagram
from .cofinality import cofinality, CofinalWitnessed, NotCofinalWitnessed, Unknown
from .dot import dot_export, dot_export_skeleton
