# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Utilities."""
import functools
import threading
import time
from collections import OrderedDict

_METRICS_LOCK = threading.Lock()
_TIMERS = OrderedDict()
_COUNTERS = OrderedDict()


class timed:  # pylint: disable=invalid-name
    """A wrapper to add a timed sample to the metric report. It can be used as a decorator or
    a context manager:

    Examples
    --------

    .. code-block:: python

        @timed("solve")
        def my_func():
            ...

        def my_func():
            with timed("solve"):
                ...
    """

    # pylint: disable=missing-docstring

    def __init__(self, name):
        self.name = name
        # one start per active call, so a decorated function may recurse
        self.starts = []

    def __enter__(self):
        self.starts.append(time.perf_counter())
        return self

    def __exit__(self, *args):
        elapsed = time.perf_counter() - self.starts.pop()
        with _METRICS_LOCK:
            samples = _TIMERS.setdefault(self.name, [])
            samples.append(elapsed)

    def __call__(self, func):
        @functools.wraps(func)
        def _timer(*args, **kwargs):
            with self:
                return func(*args, **kwargs)

        return _timer


def counter(name, value=1):
    """A wrapper to add a counter sample to the metric report."""
    with _METRICS_LOCK:
        _COUNTERS[name] = _COUNTERS.get(name, 0) + value


def get_counter(name):
    """Current value of a counter, 0 if it was never touched."""
    with _METRICS_LOCK:
        return _COUNTERS.get(name, 0)


def get_timer(name):
    """A copy of the samples (in seconds) recorded under the given name."""
    with _METRICS_LOCK:
        return list(_TIMERS.get(name, []))


def reset_metrics():
    """Drop all recorded samples."""
    with _METRICS_LOCK:
        _TIMERS.clear()
        _COUNTERS.clear()


def metrics_report():
    """Render the metric registry as text, one metric per line.

    Returns
    -------
    report: str
        Timers as ``name: count=N total=Ts``, then counters as ``name: value``.
    """
    lines = []
    with _METRICS_LOCK:
        for name, samples in _TIMERS.items():
            lines.append(f"{name}: count={len(samples)} total={sum(samples):.6f}s")
        for name, value in _COUNTERS.items():
            lines.append(f"{name}: {value}")
    return "\n".join(lines)
