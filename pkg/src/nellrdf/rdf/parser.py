"""Minimal N-Triples / N-Quads / TriG reader.

Covers what the writers emit (plus comments and blank lines). It is used by
the test suite and by the cross-model verifier; it is not a general-purpose
RDF parser.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

from .terms import IRI, XSD_STRING, BlankNode, Literal, Quad, Term, Triple

# Escape-free runs are matched in one step ("unrolled" loops); a per-character
# alternation is several times slower on long literals.
_IRI_CHARS = r'[^\x00-\x20<>"{}|^`\\]*'
_IRI = rf"<{_IRI_CHARS}(?:(?:\\u[0-9A-Fa-f]{{4}}|\\U[0-9A-Fa-f]{{8}}){_IRI_CHARS})*>"
_BNODE = r"_:[A-Za-z0-9_]+"
_LIT_CHARS = r'[^"\\\n\r]*'
_LIT = (
    rf'"{_LIT_CHARS}(?:\\(?:[tbnrf"\'\\]|u[0-9A-Fa-f]{{4}}|U[0-9A-Fa-f]{{8}}){_LIT_CHARS})*"'
    rf"(?:@[A-Za-z]+(?:-[A-Za-z0-9]+)*|\^\^{_IRI})?"
)
_TERM = f"(?:{_IRI}|{_BNODE}|{_LIT})"
_STATEMENT = re.compile(rf"[ \t]*({_TERM})[ \t]+({_TERM})[ \t]+({_TERM})(?:[ \t]+({_TERM}))?[ \t]*\.[ \t]*(?:#.*)?\Z")
_ESC = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))")
_SIMPLE = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _unescape_match(m: re.Match) -> str:
    if m.group(1):
        return chr(int(m.group(1), 16))
    if m.group(2):
        return chr(int(m.group(2), 16))
    return _SIMPLE[m.group(3)]


def _unescape(s: str) -> str:
    return _ESC.sub(_unescape_match, s) if "\\" in s else s


# predicates and class IRIs repeat on nearly every line
@lru_cache(maxsize=1 << 16)
def parse_term(tok: str) -> Term:
    if tok[0] == "<":
        return IRI(_unescape(tok[1:-1]))
    if tok[0] == "_":
        return BlankNode(tok[2:])
    end = tok.rindex('"')
    lexical = _unescape(tok[1:end])
    rest = tok[end + 1 :]
    if not rest:
        return Literal(lexical)
    if rest[0] == "@":
        return Literal(lexical, lang=rest[1:])
    return Literal(lexical, _unescape(rest[3:-1]))


def _parse_statement(line: str, lineno: int) -> Optional[Tuple[Term, ...]]:
    stripped = line.strip()
    if not stripped or stripped[0] == "#":
        return None
    m = _STATEMENT.match(line.rstrip("\r\n"))
    if m is None:
        raise ParseError(lineno, f"not a statement: {line.rstrip()!r}")
    terms = tuple(parse_term(g) if g else None for g in m.groups())
    s, p, o, g = terms
    if isinstance(s, Literal) or not isinstance(p, IRI) or (g is not None and not isinstance(g, IRI)):
        raise ParseError(lineno, "term in an invalid position")
    return terms


def iter_nquads(lines: Iterable[str]) -> Iterator[Tuple[int, Quad]]:
    """Yield ``(line number, quad)`` pairs; N-Triples input is a subset."""
    for lineno, line in enumerate(lines, 1):
        terms = _parse_statement(line, lineno)
        if terms is not None:
            yield lineno, Quad(Triple(terms[0], terms[1], terms[2]), terms[3])


def parse_nquads(data) -> List[Quad]:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if isinstance(data, str):
        data = data.split("\n")
    return [q for _, q in iter_nquads(data)]


def parse_ntriples(data) -> List[Triple]:
    out = []
    for q in parse_nquads(data):
        if q.graph is not None:
            raise ParseError(0, "quad found in N-Triples input")
        out.append(q.triple)
    return out


_GRAPH_OPEN = re.compile(rf"[ \t]*(?:({_IRI})[ \t]*)?\{{[ \t]*\Z")


def parse_trig(data) -> List[Quad]:
    """Parse the line-oriented TriG subset produced by ``serialize_quads``."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    graph: Optional[IRI] = None
    inside = False
    out: List[Quad] = []
    for lineno, line in enumerate(data.split("\n"), 1):
        stripped = line.strip()
        if not stripped or stripped[0] == "#":
            continue
        if stripped == "}":
            if not inside:
                raise ParseError(lineno, "unbalanced '}'")
            inside, graph = False, None
            continue
        m = _GRAPH_OPEN.match(line)
        if m:
            if inside:
                raise ParseError(lineno, "nested graph block")
            inside = True
            graph = parse_term(m.group(1)) if m.group(1) else None
            continue
        terms = _parse_statement(line, lineno)
        if terms[3] is not None:
            raise ParseError(lineno, "quad syntax inside TriG")
        out.append(Quad(Triple(terms[0], terms[1], terms[2]), graph))
    if inside:
        raise ParseError(0, "unterminated graph block")
    return out
