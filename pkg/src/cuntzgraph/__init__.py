"""Exact arithmetic in graph C*-algebras and certified unital embeddings O_p -> M_k(O_q)."""

from .algebra import Element, P, S, adjoint, canonical_form, equals
from .cuntz import congruence, embed, kawamura, matrix_iso
from .graphs import Graph, build_graph, graph_F, graph_G, line, rose

__all__ = [
    "Element",
    "Graph",
    "P",
    "S",
    "adjoint",
    "build_graph",
    "canonical_form",
    "congruence",
    "embed",
    "equals",
    "graph_F",
    "graph_G",
    "kawamura",
    "line",
    "matrix_iso",
    "rose",
]
