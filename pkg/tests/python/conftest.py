# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0
import pytest

from rank3bd.utils import reset_metrics
from rank3bd.utils.cache import cache


@pytest.fixture(autouse=True)
def reset_rank3bd_state():
    """Reset the metric registry and the in-memory cache before each pytest run."""
    reset_metrics()
    cache.evict_all()
    yield
