"""Finite directed graphs, finite paths and the graph families used for Cuntz embeddings."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    pass


class Path(NamedTuple):
    """A finite path: a vertex (no edges) or a compatible edge sequence.

    ``start`` and ``end`` are the extended source and target maps; for a
    length-0 path both equal the base vertex.
    """

    start: str
    end: str
    edges: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def __str__(self) -> str:
        return " ".join(self.edges) if self.edges else self.start


class Graph:
    """Immutable finite directed graph with insertion-ordered identifiers."""

    __slots__ = ("name", "vertices", "edges", "src", "tgt", "_out", "_in", "_vindex", "_eindex", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        edge_triples: Iterable[tuple[str, str, str]],
        name: str | None = None,
    ):
        vertices = tuple(str(v) for v in vertices)
        triples = [(str(e), str(s), str(t)) for e, s, t in edge_triples]
        if len(set(vertices)) != len(vertices):
            raise GraphError(f"duplicate vertex identifier in {list(vertices)}")
        vset = set(vertices)
        src: dict[str, str] = {}
        tgt: dict[str, str] = {}
        for e, s, t in triples:
            if e in src:
                raise GraphError(f"duplicate edge identifier {e!r}")
            for end in (s, t):
                if end not in vset:
                    raise GraphError(f"edge {e!r} has dangling endpoint {end!r}")
            src[e] = s
            tgt[e] = t
        out: dict[str, list[str]] = {v: [] for v in vertices}
        inc: dict[str, list[str]] = {v: [] for v in vertices}
        for e, s, t in triples:
            out[s].append(e)
            inc[t].append(e)
        set_ = object.__setattr__
        set_(self, "name", name)
        set_(self, "vertices", vertices)
        set_(self, "edges", tuple(e for e, _, _ in triples))
        set_(self, "src", src)
        set_(self, "tgt", tgt)
        set_(self, "_out", {v: tuple(es) for v, es in out.items()})
        set_(self, "_in", {v: tuple(es) for v, es in inc.items()})
        set_(self, "_vindex", {v: i for i, v in enumerate(vertices)})
        set_(self, "_eindex", {e: i for i, e in enumerate(self.edges)})
        set_(self, "_hash", hash((vertices, tuple(triples))))

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.vertices == other.vertices
            and self.edge_triples() == other.edge_triples()
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name or "Graph"
        return f"<{label}: {len(self.vertices)} vertices, {len(self.edges)} edges>"

    def edge_triples(self) -> list[tuple[str, str, str]]:
        return [(e, self.src[e], self.tgt[e]) for e in self.edges]

    def out_edges(self, v: str) -> tuple[str, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def edge_index(self, e: str) -> int:
        return self._eindex[e]

    def has_vertex(self, v) -> bool:
        return v in self._vindex

    def has_edge(self, e) -> bool:
        return e in self._eindex

    def is_sink(self, v: str) -> bool:
        return not self._out[v]

    # paths

    def vertex_path(self, v: str) -> Path:
        if v not in self._vindex:
            raise GraphError(f"unknown vertex {v!r}")
        return Path(v, v)

    def path(self, edges: Sequence[str]) -> Path:
        """Validated path through ``edges`` (must be nonempty)."""
        edges = tuple(edges)
        if not edges:
            raise GraphError("an edge sequence must be nonempty; use vertex_path for length 0")
        for e in edges:
            if e not in self._eindex:
                raise GraphError(f"unknown edge {e!r}")
        for a, b in zip(edges, edges[1:]):
            if self.tgt[a] != self.src[b]:
                raise GraphError(f"edges {a!r} and {b!r} are not composable")
        return Path(self.src[edges[0]], self.tgt[edges[-1]], edges)

    def is_valid_path(self, p: Path) -> bool:
        if not p.edges:
            return p.start == p.end and p.start in self._vindex
        if any(e not in self._eindex for e in p.edges):
            return False
        if self.src[p.edges[0]] != p.start or self.tgt[p.edges[-1]] != p.end:
            return False
        return all(self.tgt[a] == self.src[b] for a, b in zip(p.edges, p.edges[1:]))

    def paths_from(self, v: str, max_length: int) -> list[Path]:
        """All paths starting at ``v`` of length at most ``max_length``, shortest first."""
        layer = [Path(v, v)]
        found = list(layer)
        for _ in range(max_length):
            layer = [Path(p.start, self.tgt[e], p.edges + (e,)) for p in layer for e in self._out[p.end]]
            found.extend(layer)
        return found

    def all_paths(self, max_length: int) -> list[Path]:
        return [p for v in self.vertices for p in self.paths_from(v, max_length)]


def build_graph(vertex_ids: Iterable[str], edge_triples: Iterable[tuple[str, str, str]], name: str | None = None) -> Graph:
    return Graph(vertex_ids, edge_triples, name=name)


def concat(p: Path, q: Path) -> Path:
    if p.end != q.start:
        raise GraphError(f"cannot concatenate: path ends at {p.end!r} but next starts at {q.start!r}")
    return Path(p.start, q.end, p.edges + q.edges)


def concat_all(first: Path, *rest: Path) -> Path:
    out = first
    for q in rest:
        out = concat(out, q)
    return out


def is_prefix(a: Path, b: Path) -> bool:
    """``a ⪯ b``: there is a path ``c`` with ``b = a c``."""
    if a.start != b.start:
        return False
    n = len(a.edges)
    return n <= len(b.edges) and b.edges[:n] == a.edges


prefix_order = is_prefix


def strip_prefix(a: Path, b: Path) -> Path | None:
    """The path ``c`` with ``b = a c``, or None when ``a`` is not a prefix of ``b``."""
    if not is_prefix(a, b):
        return None
    rest = b.edges[len(a.edges):]
    return Path(a.end, b.end, rest)


def regular_vertices(G: Graph) -> tuple[list[str], list[str]]:
    """Regular vertices and the 0-regular ones (single outgoing edge, a loop)."""
    reg = [v for v in G.vertices if G.out_edges(v)]
    reg0 = []
    for v in reg:
        out = G.out_edges(v)
        if len(out) == 1 and G.tgt[out[0]] == v:
            reg0.append(v)
    return reg, reg0


# named families


def rose(n: int) -> Graph:
    """One vertex ``v`` with loops ``e1 .. en``."""
    if n < 2:
        raise GraphError(f"rose needs n >= 2, got {n}")
    return Graph(["v"], [(f"e{i}", "v", "v") for i in range(1, n + 1)], name=f"E_{n}")


def _line_triples(k: int) -> list[tuple[str, str, str]]:
    return [(f"l{j}", f"v{j}", f"v{j + 1}") for j in range(1, k)]


def line(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"line needs k >= 1, got {k}")
    return Graph([f"v{j}" for j in range(1, k + 1)], _line_triples(k), name=f"L_{k}")


def graph_G(m: int, k: int) -> Graph:
    """The k-line with ``m`` edges ``e1 .. em`` running from ``v_k`` back to ``v_1``."""
    if m < 2 or k < 1:
        raise GraphError(f"graph_G needs m >= 2 and k >= 1, got m={m}, k={k}")
    triples = _line_triples(k) + [(f"e{i}", f"v{k}", "v1") for i in range(1, m + 1)]
    return Graph([f"v{j}" for j in range(1, k + 1)], triples, name=f"G_{{{m},{k}}}")


def batch_count(m: int, n: int) -> int:
    """``k = (m-1)/(n-1)``; raises unless ``n-1`` divides ``m-1``."""
    if m < 2 or n < 2:
        raise GraphError(f"need m, n >= 2, got m={m}, n={n}")
    if (m - 1) % (n - 1):
        raise GraphError(f"(n-1) does not divide (m-1) for m={m}, n={n}")
    return (m - 1) // (n - 1)


def graph_F(m: int, n: int) -> Graph:
    """The k-line plus ``ebar1 .. ebarm`` out of ``v_k``; batches of n-1 end at v_k, v_{k-1}, ..., v_1.

    The last edge ``ebarm`` ends at ``v_1``.
    """
    k = batch_count(m, n)
    triples = _line_triples(k)
    for i in range(1, m):
        j = k - (i - 1) // (n - 1)
        triples.append((f"ebar{i}", f"v{k}", f"v{j}"))
    triples.append((f"ebar{m}", f"v{k}", "v1"))
    return Graph([f"v{j}" for j in range(1, k + 1)], triples, name=f"F_{{{m},{n}}}")


def graph_to_json(G: Graph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"id": e, "src": s, "tgt": t} for e, s, t in G.edge_triples()],
    }


def graph_from_json(data: dict) -> Graph:
    try:
        vertices = data["vertices"]
        edges = [(d["id"], d["src"], d["tgt"]) for d in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    return Graph(vertices, edges, name=data.get("name"))


def graph_to_dot(G: Graph) -> str:
    lines = [f'digraph "{G.name or "G"}" {{']
    for v in G.vertices:
        lines.append(f'  "{v}" [label="{v}"];')
    for e, s, t in G.edge_triples():
        lines.append(f'  "{s}" -> "{t}" [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
