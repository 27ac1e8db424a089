# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Utilities."""
from . import cache
from . import utils
from .utils import timed, counter, metrics_report, reset_metrics
