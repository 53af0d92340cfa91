"""Integer combinations of monomials ``S_a S_b*`` in a graph algebra.

Equality is decided by reducing to the standard monomial basis: at each
regular vertex the last outgoing edge (insertion order) is *special*, and a
monomial whose two paths end in the same special edge is rewritten with the
vertex relation ``P_v = sum_e S_e S_e*`` solved for that edge.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping, NamedTuple

from .graphs import Graph, GraphError, Path, concat, is_prefix


class Term(NamedTuple):
    """The monomial ``S_alpha S_beta*``; both paths end at the same vertex."""

    alpha: Path
    beta: Path


def make_term(alpha: Path, beta: Path) -> Term:
    if alpha.end != beta.end:
        raise GraphError(f"S_a S_b* needs t(a) = t(b); got {alpha.end!r} and {beta.end!r}")
    return Term(alpha, beta)


def term_product(s: Term, t: Term) -> Term | None:
    """``(S_a S_b*)(S_c S_d*)`` as a single monomial, or None when it vanishes."""
    beta, gamma = s.beta, t.alpha
    if is_prefix(beta, gamma):
        rest = Path(beta.end, gamma.end, gamma.edges[len(beta.edges):])
        return Term(concat(s.alpha, rest), t.beta)
    if is_prefix(gamma, beta):
        rest = Path(gamma.end, beta.end, beta.edges[len(gamma.edges):])
        return Term(s.alpha, concat(t.beta, rest))
    return None


def special_edges(G: Graph) -> dict[str, str]:
    return {v: G.out_edges(v)[-1] for v in G.vertices if G.out_edges(v)}


def _rewrite(G: Graph, special: Mapping[str, str], t: Term) -> list[tuple[Term, int]] | None:
    a, b = t.alpha.edges, t.beta.edges
    if not a or not b or a[-1] != b[-1]:
        return None
    e = a[-1]
    v = G.src[e]
    if special.get(v) != e:
        return None
    alpha = Path(t.alpha.start, v, a[:-1])
    beta = Path(t.beta.start, v, b[:-1])
    out = [(Term(alpha, beta), 1)]
    for f in G.out_edges(v):
        if f != e:
            w = G.tgt[f]
            out.append((Term(Path(alpha.start, w, a[:-1] + (f,)), Path(beta.start, w, b[:-1] + (f,))), -1))
    return out


def is_basic(G: Graph, t: Term, special: Mapping[str, str] | None = None) -> bool:
    return _rewrite(G, special if special is not None else special_edges(G), t) is None


def term_key(G: Graph, t: Term) -> tuple:
    a, b = t.alpha, t.beta
    return (
        len(a.edges) + len(b.edges),
        len(a.edges),
        G.vertex_index(a.start),
        tuple(G.edge_index(e) for e in a.edges),
        G.vertex_index(b.start),
        tuple(G.edge_index(e) for e in b.edges),
    )


class Element:
    """An element of the dense *-subalgebra with integer coefficients."""

    __slots__ = ("graph", "terms", "_canon")
    __hash__ = None  # equality is algebraic

    def __init__(self, graph: Graph, terms: Mapping[Term, int] | None = None):
        self.graph = graph
        self.terms = {t: c for t, c in (terms or {}).items() if c}
        self._canon: Element | None = None

    # constructors

    @classmethod
    def zero(cls, G: Graph) -> "Element":
        return cls(G)

    @classmethod
    def projection(cls, G: Graph, v: str) -> "Element":
        p = G.vertex_path(v)
        return cls(G, {Term(p, p): 1})

    @classmethod
    def monomial(cls, G: Graph, alpha: Path, beta: Path, coeff: int = 1) -> "Element":
        if not (G.is_valid_path(alpha) and G.is_valid_path(beta)):
            raise GraphError("monomial paths do not belong to the graph")
        return cls(G, {make_term(alpha, beta): coeff})

    @classmethod
    def path(cls, G: Graph, p: Path | str | Iterable[str]) -> "Element":
        """``S_p``; accepts a Path, a single edge id, or an edge sequence."""
        if isinstance(p, str):
            p = G.vertex_path(p) if G.has_vertex(p) else G.path([p])
        elif not isinstance(p, Path):
            p = G.path(p)
        elif not G.is_valid_path(p):
            raise GraphError(f"{p} is not a path in the graph")
        return cls(G, {Term(p, G.vertex_path(p.end)): 1})

    # arithmetic

    def _check(self, other: "Element") -> None:
        if self.graph != other.graph:
            raise GraphError("elements live over different graphs")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return Element(self.graph, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.graph, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.graph, {t: c * other for t, c in self.terms.items()})
        self._check(other)
        out: dict[Term, int] = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                u = term_product(s, t)
                if u is not None:
                    out[u] = out.get(u, 0) + a * b
        return Element(self.graph, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = one(self.graph)
        for _ in range(n):
            out = out * self
        return out

    def adjoint(self) -> "Element":
        return Element(self.graph, {Term(t.beta, t.alpha): c for t, c in self.terms.items()})

    star = adjoint

    def canonical(self) -> "Element":
        if self._canon is None:
            self._canon = canonical_form(self)
            self._canon._canon = self._canon
        return self._canon

    def is_zero(self) -> bool:
        return not self.canonical().terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        return equals(self, other)

    def sorted_terms(self) -> list[tuple[Term, int]]:
        return sorted(self.terms.items(), key=lambda tc: term_key(self.graph, tc[0]))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        from .render import element_text

        return element_text(self)


def term_mul(s: Term, t: Term, G: Graph) -> Element:
    u = term_product(s, t)
    return Element(G, {u: 1} if u is not None else {})


def adjoint(a: Element) -> Element:
    return a.adjoint()


def canonical_form(a: Element, rng: random.Random | None = None) -> Element:
    """Reduce ``a`` to the standard monomial basis.

    With ``rng`` the next term to rewrite is picked at random; the result
    does not depend on the order.
    """
    G = a.graph
    special = special_edges(G)
    pending = dict(a.terms)
    done: dict[Term, int] = {}
    while pending:
        if rng is None:
            t, c = pending.popitem()
        else:
            t = rng.choice(list(pending))
            c = pending.pop(t)
        if not c:
            continue
        expansion = _rewrite(G, special, t)
        if expansion is None:
            done[t] = done.get(t, 0) + c
            continue
        for u, d in expansion:
            pending[u] = pending.get(u, 0) + c * d
    out = Element(G)
    out.terms = {t: c for t, c in sorted(done.items(), key=lambda tc: term_key(G, tc[0])) if c}
    return out


def equals(a: Element, b: Element) -> bool:
    a._check(b)
    return not (a - b).canonical().terms


def one(G: Graph) -> Element:
    terms = {}
    for v in G.vertices:
        p = Path(v, v)
        terms[Term(p, p)] = 1
    return Element(G, terms)


def zero(G: Graph) -> Element:
    return Element(G)


def P(G: Graph, v: str) -> Element:
    return Element.projection(G, v)


def S(G: Graph, p) -> Element:
    return Element.path(G, p)


# JSON


def path_to_json(p: Path):
    return list(p.edges) if p.edges else {"vertex": p.start}


def path_from_json(G: Graph, data) -> Path:
    if isinstance(data, dict):
        if set(data) != {"vertex"}:
            raise GraphError(f"malformed path JSON: {data!r}")
        return G.vertex_path(data["vertex"])
    if isinstance(data, str):
        return G.path([data])
    if not isinstance(data, list) or not data:
        raise GraphError(f"malformed path JSON: {data!r}")
    return G.path(data)


def element_to_json(a: Element) -> list[dict]:
    return [
        {"coeff": c, "alpha": path_to_json(t.alpha), "beta": path_to_json(t.beta)}
        for t, c in a.sorted_terms()
    ]


def element_from_json(G: Graph, data) -> Element:
    if not isinstance(data, list):
        raise GraphError("element JSON must be a list of terms")
    out = Element(G)
    for item in data:
        try:
            coeff = item["coeff"]
            alpha = path_from_json(G, item["alpha"])
            beta = path_from_json(G, item["beta"])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed term JSON: {item!r}") from exc
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise GraphError(f"coefficients must be integers, got {coeff!r}")
        out = out + Element(G, {make_term(alpha, beta): coeff})
    return out
