# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Covering maps between truncated k-graphs."""
import logging
from collections import defaultdict

from ..bratteli import Violation
from ..errors import PreconditionError

logger = logging.getLogger("KGraph")  # pylint: disable=invalid-name


class CoveringMap:
    """A candidate covering p: Γ -> Λ given on morphism keys.

    Parameters
    ----------
    domain: TruncatedKGraph
        Γ.

    codomain: TruncatedKGraph
        Λ.

    mapping: Dict[key, key]
        The image of every morphism of Γ; vertices map through their identities.
    """

    def __init__(self, domain, codomain, mapping):
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)

    @property
    def vertex_map(self):
        return {v: self.mapping.get(v) for v in self.domain.vertices}

    def __call__(self, key):
        return self.mapping[key]

    def __repr__(self):
        return f"CoveringMap({self.domain.name} -> {self.codomain.name})"


def _check_fiberwise(p, v, domain_keys, codomain_keys, side, report):
    images = defaultdict(list)
    for key in domain_keys:
        images[p.mapping.get(key)].append(key)
    for image, keys in images.items():
        if len(keys) > 1:
            report.append(
                Violation("injectivity", str(v), f"{side}: {keys} all map to {image}")
            )
    missing = [key for key in codomain_keys if key not in images]
    if missing:
        report.append(Violation("surjectivity", str(v), f"{side}: nothing maps to {missing[0]}"))


def verify_covering(p):
    """Check that p is a covering within the common bound.

    Returns
    -------
    report: List[Violation]
        Empty iff p is a degree-preserving surjective functor that is bijective on vΓ and Γv
        for every vertex v of the domain.
    """
    dom, cod = p.domain, p.codomain
    if dom.rank != cod.rank:
        raise PreconditionError(f"rank mismatch: {dom.rank} != {cod.rank}")
    if dom.bound != cod.bound:
        raise PreconditionError(f"bound mismatch: {dom.bound} != {cod.bound}")

    report = []
    for key in dom:
        image = p.mapping.get(key)
        if image not in cod:
            report.append(Violation("functor", str(key), f"image {image} is not a morphism"))
            continue
        if cod.d(image) != dom.d(key):
            report.append(Violation("degree", str(key), f"{dom.d(key)} maps to {cod.d(image)}"))
        if p.mapping.get(dom.r(key)) != cod.r(image) or p.mapping.get(dom.s(key)) != cod.s(image):
            report.append(Violation("functor", str(key), "range or source not preserved"))
    if report:
        return report

    for mu, nu in dom.pairs():
        image = p.mapping[dom.compose(mu, nu)]
        if not cod.composable(p.mapping[mu], p.mapping[nu]) or image != cod.compose(
            p.mapping[mu], p.mapping[nu]
        ):
            report.append(Violation("functor", f"({mu}, {nu})", "composition not preserved"))
            return report

    hit = set(p.mapping[key] for key in dom)
    for key in cod:
        if key not in hit:
            report.append(Violation("surjectivity", str(key), "not in the image"))
            break

    incoming = defaultdict(list)
    for key in dom:
        incoming[dom.s(key)].append(key)
    cod_incoming = defaultdict(list)
    for key in cod:
        cod_incoming[cod.s(key)].append(key)
    for v in dom.vertices:
        pv = p.mapping[v]
        _check_fiberwise(p, v, dom.with_range(v), cod.with_range(pv), "vΓ", report)
        _check_fiberwise(p, v, incoming[v], cod_incoming[pv], "Γv", report)
    if report:
        logger.debug("Covering %s fails: %s", p, report[0])
    return report


def covering_fiber(p, lam):
    """All μ with p(μ) = λ, ordered by source then key."""
    if lam not in p.codomain:
        raise PreconditionError(f"{lam} is not in the codomain")
    lifts = [key for key in p.domain if p.mapping[key] == lam]
    return sorted(lifts, key=lambda key: (p.domain.s(key), key))


def cycle_covering(source_cycle, range_cycle):
    """p_f: cycle(m) -> cycle(n) for n | m, (x, g) -> (x, g mod n)."""
    n = len(range_cycle.vertices)
    mapping = {key: (key[0], key[1] % n) for key in source_cycle}
    return CoveringMap(source_cycle, range_cycle, mapping)


def identity_covering(graph):
    return CoveringMap(graph, graph, {key: key for key in graph})
