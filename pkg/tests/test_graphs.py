import itertools
import random

import pytest

from cuntzgraph.graphs import (
    Graph,
    GraphError,
    Path,
    build_graph,
    concat,
    graph_F,
    graph_from_json,
    graph_G,
    graph_to_dot,
    graph_to_json,
    is_prefix,
    line,
    regular_vertices,
    rose,
)


def same_up_to_labeling(A: Graph, B: Graph) -> bool:
    if len(A.vertices) != len(B.vertices) or len(A.edges) != len(B.edges):
        return False
    for perm in itertools.permutations(B.vertices):
        vm = dict(zip(A.vertices, perm))
        shape_a = sorted((vm[s], vm[t]) for _, s, t in A.edge_triples())
        shape_b = sorted((s, t) for _, s, t in B.edge_triples())
        if shape_a == shape_b:
            return True
    return False


def test_build_graph_examples():
    G = build_graph(["v"], [("e1", "v", "v"), ("e2", "v", "v")])
    assert G.vertices == ("v",) and G.edges == ("e1", "e2")
    assert G == rose(2)
    L = build_graph(["v1", "v2"], [("l1", "v1", "v2")])
    assert L == line(2)


@pytest.mark.parametrize(
    "vertices, edges",
    [
        (["v"], [("e", "v", "w")]),
        (["v", "v"], []),
        (["v"], [("e", "v", "v"), ("e", "v", "v")]),
    ],
)
def test_build_graph_rejects(vertices, edges):
    with pytest.raises(GraphError):
        build_graph(vertices, edges)


def test_graph_is_immutable():
    G = rose(2)
    with pytest.raises(AttributeError):
        G.name = "x"


def test_rose():
    G = rose(5)
    assert G.vertices == ("v",)
    assert G.edges == tuple(f"e{i}" for i in range(1, 6))
    assert regular_vertices(G) == (["v"], [])
    with pytest.raises(GraphError):
        rose(1)


def test_line():
    assert line(1).vertices == ("v1",) and line(1).edges == ()
    L = line(3)
    assert L.edge_triples() == [("l1", "v1", "v2"), ("l2", "v2", "v3")]
    assert regular_vertices(L) == (["v1", "v2"], [])
    with pytest.raises(GraphError):
        line(0)


def test_graph_G():
    assert same_up_to_labeling(graph_G(4, 1), rose(4))
    G = graph_G(3, 2)
    assert G.edge_triples() == [("l1", "v1", "v2"), ("e1", "v2", "v1"), ("e2", "v2", "v1"), ("e3", "v2", "v1")]
    assert [len(G.out_edges(v)) for v in G.vertices] == [1, 3]
    assert regular_vertices(G)[0] == ["v1", "v2"]


@pytest.mark.parametrize("m, k", [(2, 1), (3, 2), (5, 3), (4, 4)])
def test_graph_G_degrees(m, k):
    G = graph_G(m, k)
    for j in range(1, k):
        assert len(G.out_edges(f"v{j}")) == 1
    assert len(G.out_edges(f"v{k}")) == m
    assert regular_vertices(G)[0] == list(G.vertices)


def test_graph_F_small():
    F = graph_F(3, 2)
    assert F.vertices == ("v1", "v2")
    assert F.edge_triples() == [
        ("l1", "v1", "v2"),
        ("ebar1", "v2", "v2"),
        ("ebar2", "v2", "v1"),
        ("ebar3", "v2", "v1"),
    ]
    assert same_up_to_labeling(graph_F(4, 4), rose(4))
    with pytest.raises(GraphError):
        graph_F(4, 3)


def valid_F_params():
    for n in range(2, 6):
        for m in range(n, 22):
            if (m - 1) % (n - 1) == 0:
                yield m, n


@pytest.mark.parametrize("m, n", list(valid_F_params()))
def test_graph_F_counts(m, n):
    F = graph_F(m, n)
    k = (m - 1) // (n - 1)
    assert len(F.vertices) == k
    assert len(F.edges) == n * k
    assert all(len(F.in_edges(v)) == n for v in F.vertices)


def test_paths_and_concat():
    L = line(3)
    l1, l2 = L.path(["l1"]), L.path(["l2"])
    v1 = L.vertex_path("v1")
    assert concat(v1, l1) == l1
    assert concat(l1, L.vertex_path("v2")) == l1
    p = concat(l1, l2)
    assert p.edges == ("l1", "l2") and len(p) == 2 and p.start == "v1" and p.end == "v3"
    with pytest.raises(GraphError):
        concat(l2, l1)
    with pytest.raises(GraphError):
        L.path(["l2", "l1"])


def test_prefix_order_examples():
    G = rose(2)
    e1, e2, e2e1 = G.path(["e1"]), G.path(["e2"]), G.path(["e2", "e1"])
    assert is_prefix(e1, e1)
    assert is_prefix(G.vertex_path("v"), e2e1)
    assert not is_prefix(e1, e2e1)
    assert is_prefix(e2, e2e1)


def test_prefix_order_is_partial_order():
    rng = random.Random(3)
    for G in (rose(2), graph_G(3, 2), line(4)):
        paths = G.all_paths(5)
        for p in paths:
            assert G.is_valid_path(p)
        for _ in range(400):
            a, b, c = (rng.choice(paths) for _ in range(3))
            assert is_prefix(a, a)
            if is_prefix(a, b) and is_prefix(b, a):
                assert a == b
            if is_prefix(a, b) and is_prefix(b, c):
                assert is_prefix(a, c)


def test_regular_vertices_zero_regular():
    one_loop = build_graph(["v"], [("e", "v", "v")])
    assert regular_vertices(one_loop) == (["v"], ["v"])
    assert regular_vertices(line(3)) == (["v1", "v2"], [])


def test_json_round_trip_and_dot():
    for G in (rose(3), line(3), graph_G(3, 2), graph_F(5, 3)):
        data = graph_to_json(G)
        assert graph_from_json(data) == G
        assert set(data) == {"vertices", "edges"}
    dot = graph_to_dot(graph_F(3, 2))
    assert dot.startswith("digraph") and '"v2" -> "v1" [label="ebar2"];' in dot


def test_path_is_value():
    assert Path("v", "v") == Path("v", "v", ())
    assert Path("v", "v").is_vertex
