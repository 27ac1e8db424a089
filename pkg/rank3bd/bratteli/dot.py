# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Export diagrams to graphviz dot.

Vertices of one level share a rank. Edges point from source to range, so the picture reads
right to left. To plot: ``dot -Tpng -O diagram.gv``.
"""

EDGE_COLORS = ("blue", "red", "green")


def _levels(E, levels):
    if levels is None:
        levels = E.num_levels
    return range(1, levels + 1)


def _sorted_level(E, n):
    return sorted(E.level(n), key=lambda v: (v.level, E.name(v), v.index))


def dot_export(E, levels=None, rankdir="RL"):
    """The weighted diagram E, one node per vertex labeled with its name and weight.

    Parameters
    ----------
    E: WeightedBratteli
        The diagram.

    levels: Optional[int]
        Number of levels to draw; defaults to the given prefix.

    rankdir: str
        Graphviz layout direction.

    Returns
    -------
    text: str
        Deterministic dot source.
    """
    lines = ["digraph bratteli {", f"\tgraph [rankdir={rankdir}];"]
    for n in _levels(E, levels):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for v in _sorted_level(E, n):
            lines.append(f'\t\t"{E.name(v)}" [label="{E.name(v)}\\n{E.weight(v)}"];')
        lines.append("\t}")
    for n in _levels(E, levels):
        if n == 1:
            continue
        for e in sorted(E.edges_between(n - 1), key=lambda e: (E.name(e.source), E.name(e.range))):
            lines.append(f'\t"{E.name(e.source)}" -> "{E.name(e.range)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_export_skeleton(E, levels=None, rankdir="RL"):
    """The coloured skeleton of the rank-3 graph of E up to the given level.

    Vertex (v, i) carries a blue edge a and a red edge b from (v, i+1) into it; every E-edge f
    and index j of s(f) give a green edge from (s(f), j) to (r(f), j mod w(r(f))).
    """
    lines = ["digraph skeleton {", f"\tgraph [rankdir={rankdir}];"]

    def node(v, i):
        return f'"({E.name(v)},{i})"'

    for n in _levels(E, levels):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for v in _sorted_level(E, n):
            for i in range(E.weight(v)):
                lines.append(f"\t\t{node(v, i)};")
        lines.append("\t}")
    last = max(_levels(E, levels))
    for n in _levels(E, levels):
        for v in _sorted_level(E, n):
            w = E.weight(v)
            for i in range(w):
                for color in EDGE_COLORS[:2]:
                    lines.append(f"\t{node(v, (i + 1) % w)} -> {node(v, i)} [color={color}];")
            if n == last:
                continue
            edges = sorted(E.r_edges(v), key=lambda e: (E.name(e.source), e.source.index))
            for i in range(w):
                for e in edges:
                    for j in range(i, E.weight(e.source), w):
                        lines.append(
                            f"\t{node(e.source, j)} -> {node(v, i)} [color={EDGE_COLORS[2]}];"
                        )
    lines.append("}")
    return "\n".join(lines) + "\n"
