"""N-Triples, N-Quads and TriG serialization.

All writers produce UTF-8 with LF line endings and are deterministic: the
same input sequence always yields the same bytes.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .terms import IRI, XSD_STRING, BlankNode, Literal, Quad, Term, Triple

_ESCAPES = {c: f"\\u{c:04X}" for c in range(0x20)}
_ESCAPES.update({ord("\n"): "\\n", ord("\r"): "\\r", ord("\t"): "\\t", ord('"'): '\\"', ord("\\"): "\\\\"})


def escape_string(s: str) -> str:
    return s.translate(_ESCAPES)


def term_nt(t: Term) -> str:
    cls = type(t)
    if cls is IRI:
        return "<" + t.value + ">"
    if cls is Literal:
        body = '"' + t.lexical.translate(_ESCAPES) + '"'
        if t.lang is not None:
            return body + "@" + t.lang
        if t.datatype == XSD_STRING:
            return body
        return body + "^^<" + t.datatype + ">"
    if cls is BlankNode:
        return "_:" + t.label
    raise TypeError(f"not an RDF term: {t!r}")


def triple_nt(t: Triple) -> str:
    """One N-Triples statement, without the trailing newline."""
    s, p, o = t
    # IRI subjects and predicates are the overwhelmingly common case
    s = "<" + s.value + ">" if type(s) is IRI else term_nt(s)
    cls = type(o)
    if cls is IRI:
        o = "<" + o.value + ">"
    elif cls is Literal and o.lang is None:
        lexical, datatype, _ = o
        o = '"' + lexical.translate(_ESCAPES) + ('"' if datatype == XSD_STRING else '"^^<' + datatype + ">")
    else:
        o = term_nt(o)
    return s + " <" + p.value + "> " + o + " ."


def quad_nq(q: Quad) -> str:
    t, g = q
    if g is None:
        return triple_nt(t)
    return term_nt(t[0]) + " " + term_nt(t[1]) + " " + term_nt(t[2]) + " " + term_nt(g) + " ."


def iter_ntriples(triples: Iterable[Triple]) -> Iterator[str]:
    for t in triples:
        yield triple_nt(t) + "\n"


def serialize_triples(triples: Iterable[Triple], format: str = "ntriples") -> bytes:
    if format != "ntriples":
        raise ValueError(f"unsupported triple format {format!r}")
    return "".join(iter_ntriples(triples)).encode("utf-8")


def serialize_quads(quads: Iterable[Quad], format: str = "nquads") -> bytes:
    """Serialize quads as N-Quads or TriG.

    N-Quads drops the graph term for default-graph quads. TriG groups the
    statements by graph, ordering groups by first appearance; the default
    graph is written as top-level triples.
    """
    if format == "nquads":
        return "".join(quad_nq(q) + "\n" for q in quads).encode("utf-8")
    if format != "trig":
        raise ValueError(f"unsupported quad format {format!r}")
    groups: dict = {}
    for t, g in quads:
        groups.setdefault(g, []).append(t)
    out = []
    for g, triples in groups.items():
        if g is None:
            out.extend(triple_nt(t) + "\n" for t in triples)
        else:
            out.append(term_nt(g) + " {\n")
            out.extend("  " + triple_nt(t) + "\n" for t in triples)
            out.append("}\n")
    return "".join(out).encode("utf-8")
