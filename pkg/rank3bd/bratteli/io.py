# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""JSON serialization of weighted Bratteli diagrams.

.. code-block:: json

    {"levels": [[{"name": "v1", "weight": 1}], [{"name": "v2", "weight": 2}]],
     "edges": [{"from": "v2", "to": "v1"}],
     "stationary": {"start_level": 1, "period": 1}}

``from`` is the source at level n+1 and ``to`` the range at level n.
"""
import json
import logging

from ..errors import ParseError
from .diagram import REPEAT, Stationary, WeightedBratteli

logger = logging.getLogger("Bratteli")  # pylint: disable=invalid-name


def parse_diagram(text):
    """Build a diagram from its JSON text; structural problems raise ParseError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"Diagram is not valid JSON: {err}") from err
    if not isinstance(doc, dict) or "levels" not in doc or "edges" not in doc:
        raise ParseError("Diagram must be an object with 'levels' and 'edges'")
    try:
        levels = [[(vtx["name"], vtx["weight"]) for vtx in level] for level in doc["levels"]]
        edges = [(edge["from"], edge["to"]) for edge in doc["edges"]]
        stationary = None
        if doc.get("stationary") is not None:
            stat = doc["stationary"]
            stationary = Stationary(
                int(stat["start_level"]), int(stat["period"]), stat.get("mode", REPEAT)
            )
    except (KeyError, TypeError, ValueError) as err:
        raise ParseError(f"Malformed diagram document: {err!r}") from err
    return WeightedBratteli(levels, edges, stationary)


def load_diagram(path):
    """Read a diagram file (UTF-8 JSON)."""
    logger.debug("Load diagram from %s", path)
    with open(path, "r", encoding="utf-8") as filep:
        return parse_diagram(filep.read())


def dump_diagram(E):
    """The JSON text of the given prefix of E, stationary declaration included."""
    levels = []
    for n in range(1, E.num_levels + 1):
        levels.append([{"name": E.name(v), "weight": E.weight(v)} for v in E.level(n)])
    edges = []
    for n in range(1, E.num_levels):
        edges.extend(
            {"from": E.name(e.source), "to": E.name(e.range)} for e in E.edges_between(n)
        )
    doc = {"levels": levels, "edges": edges}
    if E.stationary is not None:
        doc["stationary"] = {
            "start_level": E.stationary.start_level,
            "period": E.stationary.period,
            "mode": E.stationary.mode,
        }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
