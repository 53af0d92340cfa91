"""Independent oracles used to cross-check the engine.

Nothing here goes through canonical forms, StarHom.apply or the admissibility
checkers: the representation oracle evaluates elements as operators, the
admissibility oracles enumerate paths literally.
"""

from __future__ import annotations

from collections import Counter

from cuntzgraph.graphs import Graph, Path, regular_vertices


# -- permutative representation of O_n on l^2(N): S_i d_j = d_{n j + i - 1}


def _edge_index(e: str) -> int:
    return int(e.lstrip("e"))


def _apply_s(n: int, i: int, vec: dict[int, int]) -> dict[int, int]:
    return {n * j + i - 1: c for j, c in vec.items()}


def _apply_s_star(n: int, i: int, vec: dict[int, int]) -> dict[int, int]:
    return {j // n: c for j, c in vec.items() if j % n == i - 1}


def act(x, n: int, vec: dict[int, int]) -> dict[int, int]:
    """Action of an element over rose(n) on a finitely supported vector."""
    out: Counter = Counter()
    for t, c in x.terms.items():
        v = dict(vec)
        for e in t.beta.edges:  # S_beta* = S_{b_t}* ... S_{b_1}*
            v = _apply_s_star(n, _edge_index(e), v)
        for e in reversed(t.alpha.edges):
            v = _apply_s(n, _edge_index(e), v)
        for j, d in v.items():
            out[j] += c * d
    return {j: c for j, c in out.items() if c}


def act_matrix(M, n: int, vecs: list[dict[int, int]]) -> list[dict[int, int]]:
    k = M.size
    out = []
    for i in range(k):
        acc: Counter = Counter()
        for j in range(k):
            for idx, c in act(M.rows[i][j], n, vecs[j]).items():
                acc[idx] += c
        out.append({idx: c for idx, c in acc.items() if c})
    return out


def same_operator(x, y, n: int, probes: int = 64) -> bool:
    return all(act(x, n, {j: 1}) == act(y, n, {j: 1}) for j in range(probes))


def same_matrix_operator(A, B, n: int, probes: int = 32) -> bool:
    k = A.size
    for slot in range(k):
        for j in range(probes):
            vecs = [{j: 1} if s == slot else {} for s in range(k)]
            if act_matrix(A, n, vecs) != act_matrix(B, n, vecs):
                return False
    return True


# -- literal admissibility oracles


def paths_from(G: Graph, v: str, max_len: int) -> list[Path]:
    out = [Path(v, v)]
    frontier = [Path(v, v)]
    for _ in range(max_len):
        frontier = [Path(p.start, G.tgt[e], p.edges + (e,)) for p in frontier for e in G.edges if G.src[e] == p.end]
        out.extend(frontier)
    return out


def concat(p: Path, q: Path) -> Path | None:
    if p.end != q.start:
        return None
    return Path(p.start, q.end, p.edges + q.edges)


def brute_graph_hom(h) -> dict[str, bool]:
    E, F = h.source, h.target
    bij = True
    for x in F.edges:
        pre = [e for e in E.edges if h.emap[e] == x]
        fiber = [w for w in E.vertices if h.vmap[w] == F.tgt[x]]
        tg = [E.tgt[e] for e in pre]
        injective = len(set(tg)) == len(tg)
        onto = all(w in tg for w in fiber) and all(t in fiber for t in tg)
        bij = bij and injective and onto
    reg_E = {v for v in E.vertices if any(E.src[e] == v for e in E.edges)}
    reg_F = {v for v in F.vertices if any(F.src[e] == v for e in F.edges)}
    regular = all(v in reg_E for v in E.vertices if h.vmap[v] in reg_F)
    return {"proper": True, "target-bijective": bij, "regular": regular}


def _leaf_conditions(F: Graph, X: list[Path]) -> bool:
    bound = max((len(p.edges) for p in X), default=0)
    for p in X:
        if not p.edges:
            return False
        for q in paths_from(F, p.end, bound):
            pq = concat(p, q)
            if pq in X and q.edges:
                return False
        for i in range(len(p.edges)):
            head = Path(p.start, F.src[p.edges[i]], p.edges[:i])
            for e in F.edges:
                if F.src[e] != F.src[p.edges[i]]:
                    continue
                he = Path(head.start, F.tgt[e], head.edges + (e,))
                if not any(concat(he, r) in X for r in paths_from(F, F.tgt[e], bound)):
                    return False
    return True


def brute_path_hom(f) -> dict[str, bool]:
    E, F = f.source, f.target
    vinj = len({f.vmap[v] for v in E.vertices}) == len(E.vertices)
    bound = max((len(f.emap[e].edges) for e in E.edges), default=0)
    monotone = True
    for e in E.edges:
        for e2 in E.edges:
            if e == e2:
                continue
            if any(concat(f.emap[e], g) == f.emap[e2] for g in paths_from(F, f.emap[e].end, bound)):
                monotone = False
    reg, reg0 = regular_vertices(E)
    regular = True
    for v in reg:
        out = [e for e in E.edges if E.src[e] == v]
        X = [f.emap[e] for e in out]
        general = len(set(X)) == len(X) and _leaf_conditions(F, X)
        collapse = v in reg0 and X == [Path(f.vmap[v], f.vmap[v])]
        if not (general or collapse):
            regular = False
    return {"vertex-injective": vinj, "monotone": monotone, "regular": regular}
