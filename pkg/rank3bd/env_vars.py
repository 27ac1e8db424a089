# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Environment variables read by rank3bd."""

CACHE_DIR = "RANK3BD_CACHE_DIR"
THETA = "RANK3BD_THETA"
LOG_LEVEL = "RANK3BD_LOG_LEVEL"
SEED = "RANK3BD_SEED"

DEFAULT_THETA = "cf:0,(2)"
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_SEED = 0
