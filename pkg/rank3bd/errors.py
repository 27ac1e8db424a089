# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Exceptions raised by rank3bd."""


class Rank3Error(Exception):
    """Base class of all rank3bd errors."""


class ParseError(Rank3Error, ValueError):
    """Malformed diagram file, theta spec or class text."""


class ConfigError(Rank3Error, ValueError):
    """Invalid command-line or environment configuration."""


class PreconditionError(Rank3Error, ValueError):
    """An operation was called outside of its domain."""


class TruncationError(PreconditionError):
    """A morphism, path or level needed by an operation lies outside the truncation."""


class InterpolationError(PreconditionError):
    """Some lower class is not below some upper class."""


class TraceSolveError(Rank3Error):
    """The trace equations have no solution."""
