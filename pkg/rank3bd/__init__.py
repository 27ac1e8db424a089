# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""RANK3BD: exact combinatorics of rank-3 Bratteli diagrams and covering towers of k-graphs."""
# pylint: disable=useless-import-alias
from . import arith
from . import bratteli
from . import kgraph
from . import cohomology
from . import ktheory
from . import traces
from .utils import cache

try:
    from .version import __version__ as __version__
except:  # pylint: disable=bare-except
    __version__ = "dev"
