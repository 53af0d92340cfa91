"""Plain-text and LaTeX renderings of elements, paths and matrices."""

from __future__ import annotations

import re

from .algebra import Element, Term
from .graphs import Path

_ID = re.compile(r"^([A-Za-z]+?)(bar)?(\d+)$")


def _join(parts: list[tuple[int, str]], unit: str) -> str:
    if not parts:
        return "0"
    out = []
    for i, (c, body) in enumerate(parts):
        mag = abs(c)
        if body == unit:
            piece = str(mag) if mag != 1 else unit
        else:
            piece = body if mag == 1 else f"{mag}·{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + piece)
        else:
            out.append(f" {'-' if c < 0 else '+'} {piece}")
    return "".join(out)


def term_text(t: Term) -> str:
    a, b = t.alpha, t.beta
    if a.is_vertex and b.is_vertex:
        return f"P_{a.start}"
    parts = []
    if not a.is_vertex:
        parts.append("S_{" + " ".join(a.edges) + "}")
    if not b.is_vertex:
        parts.append("S_{" + " ".join(b.edges) + "}*")
    return " ".join(parts)


def element_text(x: Element) -> str:
    return _join([(c, term_text(t)) for t, c in x.sorted_terms()], unit="\0")


def latex_id(ident: str, prime: bool = False) -> str:
    m = _ID.match(ident)
    if not m:
        base, sub, bar = ident, "", False
    else:
        base, bar, sub = m.group(1), bool(m.group(2)), m.group(3)
    if bar:
        base = r"\bar " + base
    if prime:
        base = base + "'"
    return f"{base}_{{{sub}}}" if sub else base


def path_latex(p: Path, prime: bool = False) -> str:
    if p.is_vertex:
        return latex_id(p.start, prime)
    return "".join(latex_id(e, prime) for e in p.edges)


def term_latex(t: Term, prime: bool = False) -> str:
    a, b = t.alpha, t.beta
    if a.is_vertex and b.is_vertex:
        return f"P_{{{latex_id(a.start, prime)}}}"
    out = ""
    if not a.is_vertex:
        out += f"S_{{{path_latex(a, prime)}}}"
    if not b.is_vertex:
        out += f"S_{{{path_latex(b, prime)}}}^*"
    return out


def element_latex(x: Element, prime: bool = False) -> str:
    return _join([(c, term_latex(t, prime)) for t, c in x.sorted_terms()], unit="\0").replace("·", " ")


# Cuntz-generator notation over a rose: edge e_i prints as S_i, the unit as 1.


def _rose_index(edge: str) -> str:
    m = _ID.match(edge)
    return m.group(3) if m else edge


def cuntz_term_text(t: Term) -> str:
    a = "".join(f"S_{_rose_index(e)}" for e in t.alpha.edges)
    b = "".join(f"S_{_rose_index(e)}*" for e in reversed(t.beta.edges))
    return a + b or "1"


def cuntz_text(x: Element) -> str:
    return _join([(c, cuntz_term_text(t)) for t, c in x.sorted_terms()], unit="1")


def cuntz_term_latex(t: Term) -> str:
    a = "".join(f"S_{{{_rose_index(e)}}}" for e in t.alpha.edges)
    b = "".join(f"S_{{{_rose_index(e)}}}^*" for e in reversed(t.beta.edges))
    return a + b or "1"


def cuntz_latex(x: Element) -> str:
    return _join([(c, cuntz_term_latex(t)) for t, c in x.sorted_terms()], unit="1").replace("·", " ")
