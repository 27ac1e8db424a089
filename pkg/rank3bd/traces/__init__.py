# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Graph traces, their exact computation and their pairing with K_0."""
from .trace import (
    GraphTrace,
    check_graph_trace,
    check_F_trace,
    lift_trace,
    restrict_trace,
    collection_of,
    glue,
    compatibility_check,
)
from .solver import AffineTraceSpace, solve_traces
from .pairing import k0_pairing, k0_positive_by_trace, zero_set
