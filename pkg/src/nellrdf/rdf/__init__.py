from .parser import ParseError, iter_nquads, parse_nquads, parse_ntriples, parse_term, parse_trig
from .terms import (
    IRI,
    RDF_LANGSTRING,
    XSD,
    XSD_STRING,
    BlankNode,
    Literal,
    Quad,
    Term,
    Triple,
    boolean_literal,
    canonical_datetime,
    canonical_decimal,
    date_literal,
    datetime_literal,
    decimal_literal,
    integer_literal,
    is_absolute_iri,
    lang_literal,
    mk_iri,
    non_negative_integer_literal,
    typed,
)
from .writer import escape_string, quad_nq, serialize_quads, serialize_triples, term_nt, triple_nt

__all__ = [
    "IRI",
    "RDF_LANGSTRING",
    "XSD",
    "XSD_STRING",
    "BlankNode",
    "Literal",
    "ParseError",
    "Quad",
    "Term",
    "Triple",
    "boolean_literal",
    "canonical_datetime",
    "canonical_decimal",
    "date_literal",
    "datetime_literal",
    "decimal_literal",
    "escape_string",
    "integer_literal",
    "is_absolute_iri",
    "iter_nquads",
    "lang_literal",
    "mk_iri",
    "non_negative_integer_literal",
    "parse_nquads",
    "parse_ntriples",
    "parse_term",
    "parse_trig",
    "quad_nq",
    "serialize_quads",
    "serialize_triples",
    "term_nt",
    "triple_nt",
    "typed",
]
