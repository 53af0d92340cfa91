"""Generator assignments between graph algebras and their relation checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Mapping

from .algebra import Element, element_to_json, one
from .graphs import Graph, graph_to_json, regular_vertices
from .morphisms import (
    GraphHom,
    PathHom,
    check_admissible_graph_hom,
    check_admissible_path_hom,
)
from .report import Report


class AdmissibilityError(ValueError):
    def __init__(self, message: str, report: Report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class StarHom:
    """Images of the vertex projections and edge partial isometries of ``source``."""

    source: Graph
    target: Graph
    pmap: Mapping[str, Element]
    smap: Mapping[str, Element]

    def __post_init__(self):
        for x in list(self.pmap.values()) + list(self.smap.values()):
            if x.graph != self.target:
                raise ValueError("generator images must live over the target graph")

    def path_image(self, alpha, cache: dict | None = None) -> Element:
        if cache is not None and alpha in cache:
            return cache[alpha]
        if alpha.is_vertex:
            out = self.pmap[alpha.start]
        else:
            out = self.smap[alpha.edges[0]]
            for e in alpha.edges[1:]:
                out = out * self.smap[e]
        if cache is not None:
            cache[alpha] = out
        return out

    def __call__(self, x: Element) -> Element:
        return apply(self, x)

    def to_json(self) -> dict:
        return {
            "source": graph_to_json(self.source),
            "target": graph_to_json(self.target),
            "pmap": {v: element_to_json(self.pmap[v].canonical()) for v in self.source.vertices},
            "smap": {e: element_to_json(self.smap[e].canonical()) for e in self.source.edges},
        }


def identity_star_hom(G: Graph) -> StarHom:
    return StarHom(
        G,
        G,
        {v: Element.projection(G, v) for v in G.vertices},
        {e: Element.path(G, e) for e in G.edges},
    )


def apply(phi: StarHom, x: Element) -> Element:
    if x.graph != phi.source:
        raise ValueError("element does not live over the source graph")
    cache: dict = {}
    out = Element(phi.target)
    for t, c in x.terms.items():
        a = phi.path_image(t.alpha, cache)
        b = phi.path_image(t.beta, cache)
        out = out + (a * b.adjoint()) * c
    return out.canonical()


def induce_contravariant(g: GraphHom) -> StarHom:
    """``g: F -> E`` gives ``C*(E) -> C*(F)`` sending each generator to the sum over its preimage."""
    report = check_admissible_graph_hom(g)
    if not report.passed:
        raise AdmissibilityError("graph homomorphism is not admissible", report)
    F, E = g.source, g.target
    pmap = {v: sum((Element.projection(F, w) for w in g.vertex_preimage(v)), Element(F)) for v in E.vertices}
    smap = {e: sum((Element.path(F, x) for x in g.edge_preimage(e)), Element(F)) for e in E.edges}
    return StarHom(E, F, pmap, smap)


def induce_covariant(f: PathHom) -> StarHom:
    report = check_admissible_path_hom(f)
    if not report.passed:
        raise AdmissibilityError("path homomorphism is not admissible", report)
    E, F = f.source, f.target
    pmap = {v: Element.projection(F, f.vmap[v]) for v in E.vertices}
    smap = {e: Element.path(F, f.emap[e]) for e in E.edges}
    return StarHom(E, F, pmap, smap)


def compose_star_homs(psi: StarHom, phi: StarHom) -> StarHom:
    """``psi ∘ phi``."""
    if phi.target != psi.source:
        raise ValueError("star homomorphisms are not composable")
    return StarHom(
        phi.source,
        psi.target,
        {v: apply(psi, x) for v, x in phi.pmap.items()},
        {e: apply(psi, x) for e, x in phi.smap.items()},
    )


def star_homs_agree(a: StarHom, b: StarHom) -> bool:
    """Same source, target and generator images up to algebraic equality."""
    if a.source != b.source or a.target != b.target:
        return False
    return all(a.pmap[v] == b.pmap[v] for v in a.source.vertices) and all(
        a.smap[e] == b.smap[e] for e in a.source.edges
    )


def verify_relations(
    G: Graph,
    pmap: Mapping[str, Any],
    smap: Mapping[str, Any],
    unit: Any,
    title: str = "relations",
) -> Report:
    """Check the graph-algebra relations of ``G`` on proposed generator images.

    Images may be any objects with ``*``, ``+``, ``-``, ``adjoint()``,
    ``canonical()`` and ``is_zero()``; ``Element`` and ``MatrixElement``
    both qualify.
    """
    report = Report(title)

    def check(clause: str, subject: str, lhs, rhs) -> None:
        diff = lhs - rhs
        ok = diff.is_zero()
        report.add(clause, ok, subject, None if ok else diff.canonical())

    for v in G.vertices:
        p = pmap[v]
        check("orth-proj", f"P_{v}* = P_{v}", p.adjoint(), p)
        check("orth-proj", f"P_{v}^2 = P_{v}", p * p, p)
    for v, w in combinations(G.vertices, 2):
        check("orth-proj", f"P_{v} P_{w} = 0", pmap[v] * pmap[w], 0 * unit)
    for e in G.edges:
        s = smap[e]
        check("1", f"S_{e}* S_{e} = P_{G.tgt[e]}", s.adjoint() * s, pmap[G.tgt[e]])
    for e, f in combinations(G.edges, 2):
        check("orth-range", f"S_{e}* S_{f} = 0", smap[e].adjoint() * smap[f], 0 * unit)
    for e in G.edges:
        check("3", f"P_{G.src[e]} S_{e} = S_{e}", pmap[G.src[e]] * smap[e], smap[e])
    for v in regular_vertices(G)[0]:
        total = 0 * unit
        for e in G.out_edges(v):
            total = total + smap[e] * smap[e].adjoint()
        check("2", f"P_{v} = sum S_e S_e*", pmap[v], total)
    total = 0 * unit
    for v in G.vertices:
        total = total + pmap[v]
    report.flags["unital"] = (total - unit).is_zero()
    report.flags["nonzero"] = all(not pmap[v].is_zero() for v in G.vertices)
    return report


def verify_star_hom(phi: StarHom) -> Report:
    return verify_relations(phi.source, phi.pmap, phi.smap, one(phi.target), title="*-homomorphism relations")
