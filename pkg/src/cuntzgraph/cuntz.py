"""Cuntz-algebra constructions and the generator of unital embeddings O_p -> M_k(O_q).

The pipeline composes three functorial *-homomorphisms::

    C*(E_p) --pivot*--> C*(F_{m,p}) --aux_*--> C*(G_{m,k}) --lift_*--> C*(G_{q,k})

with ``m = (q-1)s + 1`` and ``(p-1)k = (q-1)s``, then reads the images of
the ``p`` generators as ``k x k`` matrices over O_q through the matrix
isomorphism for ``G_{q,k}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Element, Term, element_to_json, one
from .functors import (
    StarHom,
    compose_star_homs,
    induce_contravariant,
    induce_covariant,
    verify_relations,
    verify_star_hom,
)
from .graphs import Graph, GraphError, Path, batch_count, graph_F, graph_G, rose
from .morphisms import GraphHom, PathHom, identity_path_hom
from .render import cuntz_latex, cuntz_text
from .report import Report


class CongruenceError(ValueError):
    pass


class VerificationError(RuntimeError):
    def __init__(self, message: str, report: Report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class CongruenceWitness:
    p: int
    q: int
    k: int
    s: int

    @property
    def m(self) -> int:
        return (self.q - 1) * self.s + 1

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "k": self.k, "s": self.s}


def congruence(p: int, q: int, k: int) -> CongruenceWitness | None:
    """The s with ``(p-1)k = (q-1)s``, or None when (q-1) does not divide (p-1)k."""
    if p < 2 or q < 2 or k < 1:
        raise CongruenceError(f"need p, q >= 2 and k >= 1, got p={p}, q={q}, k={k}")
    s, r = divmod((p - 1) * k, q - 1)
    if r:
        return None
    return CongruenceWitness(p, q, k, s)


# the named morphisms


def _divisible(m: int, n: int) -> int:
    try:
        return batch_count(m, n)
    except GraphError as exc:
        raise CongruenceError(str(exc)) from exc


def kawamura_words(m: int, n: int) -> list[tuple[int, ...]]:
    """For each generator of O_m, the indices of its image word in O_n."""
    k = _divisible(m, n)
    words = []
    for batch in range(1, k + 1):
        for j in range(1, n):
            words.append((n,) * (batch - 1) + (j,))
    words.append((n,) * k)
    return words


def kawamura(m: int, n: int) -> PathHom:
    """``e_{(b-1)(n-1)+j} -> e_n^{b-1} e_j`` for each batch b, and ``e_m -> e_n^k``."""
    E, F = rose(m), rose(n)
    words = kawamura_words(m, n)
    emap = {f"e{i}": F.path([f"e{j}" for j in w]) for i, w in enumerate(words, start=1)}
    return PathHom(E, F, {"v": "v"}, emap)


def pivot_hom(m: int, n: int) -> GraphHom:
    """Collapse F_{m,n} onto the rose E_n; each loop's preimage has one edge ending at each vertex."""
    k = _divisible(m, n)
    F, E = graph_F(m, n), rose(n)
    emap = {f"l{j}": f"e{n}" for j in range(1, k)}
    for i in range(1, m):
        emap[f"ebar{i}"] = f"e{(i - 1) % (n - 1) + 1}"
    emap[f"ebar{m}"] = f"e{n}"
    return GraphHom(F, E, {v: "v" for v in F.vertices}, emap)


def aux_hom(m: int, n: int) -> PathHom:
    """F_{m,n} -> G_{m,k}: batch edges ending at v_{j+1} are completed by ``l_1 .. l_j``."""
    k = _divisible(m, n)
    F, G = graph_F(m, n), graph_G(m, k)
    emap = {f"l{j}": G.path([f"l{j}"]) for j in range(1, k)}
    for i in range((n - 1) * (k - 1) + 1, m + 1):
        emap[f"ebar{i}"] = G.path([f"e{i}"])
    for j in range(1, k):
        for r in range(1, n):
            i = (n - 1) * (k - 1 - j) + r
            emap[f"ebar{i}"] = G.path([f"e{i}"] + [f"l{t}" for t in range(1, j + 1)])
    return PathHom(F, G, {v: v for v in F.vertices}, emap)


def line_lift(m: int, q: int, k: int) -> PathHom:
    """G_{m,k} -> G_{q,k}: Kawamura's words with a full line traversal between letters."""
    words = kawamura_words(m, q)
    G, H = graph_G(m, k), graph_G(q, k)
    L = [f"l{t}" for t in range(1, k)]
    emap = {f"l{j}": H.path([f"l{j}"]) for j in range(1, k)}
    for i, w in enumerate(words, start=1):
        edges: list[str] = []
        for pos, letter in enumerate(w):
            if pos:
                edges.extend(L)
            edges.append(f"e{letter}")
        emap[f"e{i}"] = H.path(edges)
    return PathHom(G, H, {v: v for v in G.vertices}, emap)


# matrices over O_m


class MatrixElement:
    """A ``k x k`` matrix of elements over a rose graph."""

    __slots__ = ("graph", "rows")
    __hash__ = None

    def __init__(self, graph: Graph, rows: Sequence[Sequence[Element]]):
        self.graph = graph
        self.rows = [list(r) for r in rows]
        k = len(self.rows)
        if any(len(r) != k for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, G: Graph, k: int) -> "MatrixElement":
        return cls(G, [[Element(G) for _ in range(k)] for _ in range(k)])

    @classmethod
    def identity(cls, G: Graph, k: int) -> "MatrixElement":
        return cls(G, [[one(G) if i == j else Element(G) for j in range(k)] for i in range(k)])

    @classmethod
    def unit_at(cls, G: Graph, k: int, i: int, j: int, x: Element | None = None) -> "MatrixElement":
        """``x`` (default 1) at the 1-based entry (i, j)."""
        out = cls.zeros(G, k)
        out.rows[i - 1][j - 1] = one(G) if x is None else x
        return out

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "MatrixElement") -> None:
        if self.graph != other.graph or self.size != other.size:
            raise ValueError("matrices of different shape or over different graphs")

    def __add__(self, other):
        self._check(other)
        return MatrixElement(self.graph, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return MatrixElement(self.graph, [[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MatrixElement(self.graph, [[a * other for a in r] for r in self.rows])
        self._check(other)
        k = self.size
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = Element(self.graph)
                for t in range(k):
                    a, b = self.rows[i][t], other.rows[t][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixElement(self.graph, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def adjoint(self) -> "MatrixElement":
        k = self.size
        return MatrixElement(self.graph, [[self.rows[j][i].adjoint() for j in range(k)] for i in range(k)])

    def canonical(self) -> "MatrixElement":
        return MatrixElement(self.graph, [[a.canonical() for a in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.graph == other.graph and self.size == other.size and (self - other).is_zero()

    def to_json(self) -> list[list[list[dict]]]:
        return [[element_to_json(a.canonical()) for a in r] for r in self.rows]

    def text(self) -> str:
        return "[" + ", ".join("[" + ", ".join(cuntz_text(a.canonical()) for a in r) + "]" for r in self.rows) + "]"

    def latex(self) -> str:
        body = r" \\ ".join(" & ".join(cuntz_latex(a.canonical()) for a in r) for r in self.rows)
        return r"\begin{pmatrix} " + body + r" \end{pmatrix}"

    def __repr__(self):
        return self.text()


class MatrixIso:
    """The isomorphism C*(G_{m,k}) -> M_k(O_m).

    ``P_{v_j}`` goes to the diagonal unit at (j, j), ``S_{l_j}`` to the unit
    at (j, j+1) and ``S_{e_i}`` to ``S_i`` at (k, 1).
    """

    def __init__(self, m: int, k: int):
        self.m, self.k = m, k
        self.graph = graph_G(m, k)
        self.rose = rose(m)

    def _word(self, p: Path) -> Path:
        letters = [e for e in p.edges if not e.startswith("l")]
        return self.rose.path(letters) if letters else self.rose.vertex_path("v")

    def __call__(self, x: Element) -> MatrixElement:
        if x.graph != self.graph:
            raise ValueError("element does not live over G_{m,k}")
        R = self.rose
        out = MatrixElement.zeros(R, self.k)
        for t, c in x.terms.items():
            a = self.graph.vertex_index(t.alpha.start)
            b = self.graph.vertex_index(t.beta.start)
            entry = Element(R, {Term(self._word(t.alpha), self._word(t.beta)): c})
            out.rows[a][b] = out.rows[a][b] + entry
        return out

    def _lift(self, row: int, word: Path) -> Path:
        G, k = self.graph, self.k
        edges = [f"l{j}" for j in range(row, k)]
        for letter in word.edges:
            edges.append(letter)
            edges.extend(f"l{j}" for j in range(1, k))
        return G.path(edges) if edges else G.vertex_path(f"v{row}")

    def inverse(self, M: MatrixElement) -> Element:
        if M.graph != self.rose or M.size != self.k:
            raise ValueError(f"expected a {self.k}x{self.k} matrix over O_{self.m}")
        out = Element(self.graph)
        for a in range(self.k):
            for b in range(self.k):
                for t, c in M.rows[a][b].terms.items():
                    term = Term(self._lift(a + 1, t.alpha), self._lift(b + 1, t.beta))
                    out = out + Element(self.graph, {term: c})
        return out

    def generator_images(self) -> tuple[dict[str, MatrixElement], dict[str, MatrixElement]]:
        R, k = self.rose, self.k
        pmap = {f"v{j}": MatrixElement.unit_at(R, k, j, j) for j in range(1, k + 1)}
        smap = {f"l{j}": MatrixElement.unit_at(R, k, j, j + 1) for j in range(1, k)}
        for i in range(1, self.m + 1):
            smap[f"e{i}"] = MatrixElement.unit_at(R, k, k, 1, Element.path(R, f"e{i}"))
        return pmap, smap

    def verify_dictionary(self) -> Report:
        pmap, smap = self.generator_images()
        unit = MatrixElement.identity(self.rose, self.k)
        return verify_relations(self.graph, pmap, smap, unit, title=f"matrix dictionary for G_{{{self.m},{self.k}}}")


def matrix_iso(m: int, k: int) -> MatrixIso:
    return MatrixIso(m, k)


def matrix_check(images: Sequence[MatrixElement]) -> Report:
    """Cuntz relations ``T_i* T_j = δ_ij 1`` and ``Σ T_i T_i* = 1`` in matrix form."""
    report = Report("matrix Cuntz relations")
    if not images:
        report.add("shape", False, "", "no generators")
        return report
    G, k = images[0].graph, images[0].size
    if any(T.graph != G or T.size != k for T in images):
        report.add("shape", False, "", "generators differ in size or coefficient algebra")
        return report
    unit = MatrixElement.identity(G, k)
    zero = MatrixElement.zeros(G, k)
    for i, Ti in enumerate(images, start=1):
        for j, Tj in enumerate(images, start=1):
            diff = Ti.adjoint() * Tj - (unit if i == j else zero)
            ok = diff.is_zero()
            clause = "isometry" if i == j else "orth-range"
            report.add(clause, ok, f"T_{i}* T_{j}", None if ok else diff.canonical())
    total = zero
    for T in images:
        total = total + T * T.adjoint()
    diff = total - unit
    ok = diff.is_zero()
    report.add("cuntz-sum", ok, "sum T_i T_i* = 1", None if ok else diff.canonical())
    return report


# end-to-end


@dataclass
class EmbeddingResult:
    witness: CongruenceWitness
    generator_images: list[MatrixElement]
    chain: dict = field(repr=False)
    star_hom: StarHom = field(repr=False)
    report: Report | None = None
    matrix_report: Report | None = None

    @property
    def verified(self) -> bool:
        return (
            self.report is not None
            and self.matrix_report is not None
            and self.report.passed
            and bool(self.report.flags.get("unital"))
            and bool(self.report.flags.get("nonzero"))
            and self.matrix_report.passed
        )

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_json(),
            "m": self.witness.m,
            "generators": {f"S_{i}": T.to_json() for i, T in enumerate(self.generator_images, start=1)},
            "chain": {name: hom.to_json() for name, hom in self.chain.items()},
            "report": self.report.to_json() if self.report else None,
            "matrix_report": self.matrix_report.to_json() if self.matrix_report else None,
        }


def embed(p: int, q: int, k: int, s: int | None = None, verify: bool = True) -> EmbeddingResult:
    w = congruence(p, q, k)
    if w is None:
        raise CongruenceError(f"(q-1) does not divide (p-1)k: q-1={q - 1}, (p-1)k={(p - 1) * k}")
    if s is not None and s != w.s:
        raise CongruenceError(f"s={s} does not satisfy (p-1)k = (q-1)s; the only solution is s={w.s}")
    m = w.m
    g = pivot_hom(m, p)
    f = aux_hom(m, p)
    e = line_lift(m, q, k)
    h = identity_path_hom(rose(p))
    phi = compose_star_homs(induce_covariant(e), compose_star_homs(induce_covariant(f), induce_contravariant(g)))
    iso = matrix_iso(q, k)
    images = [iso(phi.smap[f"e{i}"]) for i in range(1, p + 1)]
    chain = {"h": h, "g": g, "f": f, "e": e}
    result = EmbeddingResult(w, images, chain, phi)
    if verify:
        result.report = verify_star_hom(phi)
        result.matrix_report = matrix_check(images)
        if not result.verified:
            bad = result.report if not result.report.passed else result.matrix_report
            raise VerificationError(f"embedding O_{p} -> M_{k}(O_{q}) failed verification", bad)
    return result


def embedding_text(result: EmbeddingResult) -> str:
    w = result.witness
    lines = [f"O_{w.p} -> M_{w.k}(O_{w.q})  (s={w.s}, m={w.m})"]
    for i, T in enumerate(result.generator_images, start=1):
        lines.append(f"S_{i} |-> {T.text()}")
    if result.report is not None:
        lines.append(f"verified: {'yes' if result.verified else 'no'}")
    return "\n".join(lines) + "\n"


def embedding_latex(result: EmbeddingResult) -> str:
    w = result.witness
    rows = [f"S_{{{i}}} &\\longmapsto {T.latex()}" for i, T in enumerate(result.generator_images, start=1)]
    header = f"% O_{w.p} -> M_{w.k}(O_{w.q}), s={w.s}, m={w.m}\n"
    return header + "\\begin{align*}\n" + " \\\\\n".join(rows) + "\n\\end{align*}\n"
