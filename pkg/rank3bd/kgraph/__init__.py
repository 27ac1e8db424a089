# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Truncated k-graphs, coverings and the rank-3 graph of a weighted Bratteli diagram."""
from . import degree
from .truncated import (
    Morphism,
    TruncatedKGraph,
    build_torus,
    skew_product,
    build_cycle,
    build_from_graph,
    cartesian_product,
    boundary_paths,
    min_common_ext,
)
from .covering import CoveringMap, verify_covering, covering_fiber, cycle_covering, identity_covering
from .rank3 import (
    RankThreeMorphism,
    vertex,
    compose,
    factorize,
    edge_e3,
    rank2_morphism,
    loop_morphisms,
    upward_paths,
    enumerate_morphisms,
    rank_three_graph,
)
from .tower import (
    CoveringTower,
    tower_from_path,
    tower_coverings,
    check_tower_properties,
    fiber_sizes,
)
