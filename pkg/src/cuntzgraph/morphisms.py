"""Graph homomorphisms, path homomorphisms and their admissibility checks.

Two admissibility notions are decided here:

* graph homomorphisms (contravariant side): properness, target-bijectivity
  on edge preimages, and pulling regular vertices back to regular vertices;
* path homomorphisms (covariant side): vertex-injectivity, monotonicity
  (no edge image is a prefix of another) and regularity (the images of the
  edges leaving a regular vertex form a complete prefix antichain, or a
  0-regular loop collapses onto its vertex).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .algebra import path_from_json, path_to_json
from .graphs import Graph, GraphError, Path, graph_from_json, graph_to_json, is_prefix, regular_vertices
from .report import Report


class MorphismError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GraphHom:
    source: Graph
    target: Graph
    vmap: Mapping[str, str]
    emap: Mapping[str, str]

    def __eq__(self, other):
        if not isinstance(other, GraphHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.vmap) == dict(other.vmap)
            and dict(self.emap) == dict(other.emap)
        )

    __hash__ = None

    def vertex_preimage(self, w: str) -> list[str]:
        return [v for v in self.source.vertices if self.vmap[v] == w]

    def edge_preimage(self, x: str) -> list[str]:
        return [e for e in self.source.edges if self.emap[e] == x]

    def to_json(self) -> dict:
        return {
            "source": graph_to_json(self.source),
            "target": graph_to_json(self.target),
            "vmap": dict(self.vmap),
            "emap": {e: self.emap[e] for e in self.source.edges},
        }


@dataclass(frozen=True, eq=False)
class PathHom:
    """A path homomorphism, given by its values on vertices and edges."""

    source: Graph
    target: Graph
    vmap: Mapping[str, str]
    emap: Mapping[str, Path]

    def __eq__(self, other):
        if not isinstance(other, PathHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.vmap) == dict(other.vmap)
            and dict(self.emap) == dict(other.emap)
        )

    __hash__ = None

    def __call__(self, p: Path) -> Path:
        if p.is_vertex:
            w = self.vmap[p.start]
            return Path(w, w)
        edges: tuple[str, ...] = ()
        for e in p.edges:
            edges += self.emap[e].edges
        return Path(self.vmap[p.start], self.vmap[p.end], edges)

    def to_json(self) -> dict:
        return {
            "source": graph_to_json(self.source),
            "target": graph_to_json(self.target),
            "vmap": dict(self.vmap),
            "emap": {e: path_to_json(self.emap[e]) for e in self.source.edges},
        }


def identity_graph_hom(G: Graph) -> GraphHom:
    return GraphHom(G, G, {v: v for v in G.vertices}, {e: e for e in G.edges})


def identity_path_hom(G: Graph) -> PathHom:
    return lift_graph_hom(identity_graph_hom(G))


def validate_graph_hom(h: GraphHom) -> bool:
    E, F = h.source, h.target
    if set(h.vmap) != set(E.vertices) or set(h.emap) != set(E.edges):
        return False
    if any(not F.has_vertex(w) for w in h.vmap.values()):
        return False
    if any(not F.has_edge(x) for x in h.emap.values()):
        return False
    return all(
        F.src[h.emap[e]] == h.vmap[E.src[e]] and F.tgt[h.emap[e]] == h.vmap[E.tgt[e]] for e in E.edges
    )


def compose_graph_homs(g: GraphHom, f: GraphHom) -> GraphHom:
    """``g ∘ f``."""
    if f.target != g.source:
        raise MorphismError("graph homomorphisms are not composable")
    return GraphHom(
        f.source,
        g.target,
        {v: g.vmap[f.vmap[v]] for v in f.source.vertices},
        {e: g.emap[f.emap[e]] for e in f.source.edges},
    )


def check_admissible_graph_hom(h: GraphHom) -> Report:
    E, F = h.source, h.target
    report = Report("admissible graph homomorphism")
    if not validate_graph_hom(h):
        report.add("homomorphism", False, "", "maps are not total or do not intertwine source/target")
        return report
    report.add("proper", True, "", "finite graphs")
    for x in F.edges:
        fiber = h.vertex_preimage(F.tgt[x])
        targets = [E.tgt[e] for e in h.edge_preimage(x)]
        ok = Counter(targets) == Counter(fiber)
        report.add(
            "target-bijective",
            ok,
            f"edge {x}",
            None if ok else {"edge": x, "targets": targets, "fiber": fiber},
        )
    reg_E = set(regular_vertices(E)[0])
    reg_F = set(regular_vertices(F)[0])
    for v in E.vertices:
        if h.vmap[v] in reg_F:
            ok = v in reg_E
            report.add("regular", ok, f"vertex {v}", None if ok else {"vertex": v, "image": h.vmap[v]})
    return report


def validate_path_hom(f: PathHom) -> bool:
    E, F = f.source, f.target
    if set(f.vmap) != set(E.vertices) or set(f.emap) != set(E.edges):
        return False
    if any(not F.has_vertex(w) for w in f.vmap.values()):
        return False
    for e in E.edges:
        p = f.emap[e]
        if not F.is_valid_path(p):
            return False
        if p.start != f.vmap[E.src[e]] or p.end != f.vmap[E.tgt[e]]:
            return False
    return True


def _leaf_set_failures(F: Graph, members: list[Path]) -> dict[str, list]:
    """Violations of 'complete prefix antichain of positive-length paths' for ``members``."""
    bad: dict[str, list] = {"regular-positive-length": [], "regular-antichain": [], "regular-complete": []}
    X = list(dict.fromkeys(members))
    for p in X:
        if p.is_vertex:
            bad["regular-positive-length"].append({"path": p})
    for p in X:
        for q in X:
            if p != q and is_prefix(p, q):
                bad["regular-antichain"].append({"prefix": p, "extension": q})
    prefixes = {(p.start, p.edges[:j]) for p in X for j in range(len(p.edges) + 1)}
    for p in X:
        for i, ei in enumerate(p.edges):
            for e in F.out_edges(F.src[ei]):
                if (p.start, p.edges[:i] + (e,)) not in prefixes:
                    bad["regular-complete"].append({"path": p, "index": i + 1, "edge": e})
    return bad


def check_admissible_path_hom(f: PathHom) -> Report:
    E, F = f.source, f.target
    report = Report("admissible path homomorphism")
    if not validate_path_hom(f):
        report.add("homomorphism", False, "", "maps are not total or break endpoint equivariance")
        return report

    images: dict[str, list[str]] = {}
    for v in E.vertices:
        images.setdefault(f.vmap[v], []).append(v)
    for w, pre in images.items():
        ok = len(pre) == 1
        report.add("vertex-injective", ok, f"image {w}", None if ok else {"vertices": pre, "image": w})

    for e in E.edges:
        for e2 in E.edges:
            if e != e2 and is_prefix(f.emap[e], f.emap[e2]):
                report.add("monotone", False, f"edges {e},{e2}", {"edge": e, "other": e2})
    if not report.failures("monotone"):
        report.add("monotone", True, "all edge pairs")

    reg, reg0 = regular_vertices(E)
    for v in reg:
        out = E.out_edges(v)
        if v in reg0 and f.emap[out[0]] == Path(f.vmap[v], f.vmap[v]):
            report.add("regular-zero", True, f"vertex {v}", None)
            continue
        seen: dict[Path, str] = {}
        dup = []
        for e in out:
            p = f.emap[e]
            if p in seen:
                dup.append({"edge": seen[p], "other": e})
            else:
                seen[p] = e
        report.add("regular-injective", not dup, f"vertex {v}", dup or None)
        bad = _leaf_set_failures(F, [f.emap[e] for e in out])
        for clause, witnesses in bad.items():
            for w in witnesses:
                w = dict(w, vertex=v)
                report.add(clause, False, f"vertex {v}", w)
            if not witnesses:
                report.add(clause, True, f"vertex {v}")
    return report


def lift_graph_hom(h: GraphHom) -> PathHom:
    F = h.target
    return PathHom(h.source, F, dict(h.vmap), {e: F.path([h.emap[e]]) for e in h.source.edges})


def compose_path_homs(g: PathHom, f: PathHom) -> PathHom:
    """``g ∘ f`` for ``f: A -> B`` and ``g: B -> C``."""
    if f.target != g.source:
        raise MorphismError("path homomorphisms are not composable")
    return PathHom(
        f.source,
        g.target,
        {v: g.vmap[f.vmap[v]] for v in f.source.vertices},
        {e: g(f.emap[e]) for e in f.source.edges},
    )


# JSON


def _load_graphs(data: dict) -> tuple[Graph, Graph]:
    try:
        return graph_from_json(data["source"]), graph_from_json(data["target"])
    except KeyError as exc:
        raise MorphismError(f"morphism JSON lacks {exc}") from exc


def graph_hom_from_json(data: dict) -> GraphHom:
    E, F = _load_graphs(data)
    emap = {}
    for e, x in data.get("emap", {}).items():
        if isinstance(x, list) and len(x) == 1:
            x = x[0]
        if not isinstance(x, str):
            raise MorphismError(f"graph homomorphism must send edge {e!r} to a single edge, got {x!r}")
        emap[e] = x
    return GraphHom(E, F, dict(data.get("vmap", {})), emap)


def path_hom_from_json(data: dict) -> PathHom:
    E, F = _load_graphs(data)
    try:
        emap = {e: path_from_json(F, x) for e, x in data.get("emap", {}).items()}
    except GraphError as exc:
        raise MorphismError(str(exc)) from exc
    return PathHom(E, F, dict(data.get("vmap", {})), emap)
