"""RDF terms, triples and quads, plus canonical literal constructors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from datetime import date, datetime, timezone
from decimal import Decimal, InvalidOperation
from typing import NamedTuple, Optional, Union

from ..errors import InvalidIri

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF_LANGSTRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"
XSD_STRING = XSD + "string"
_XSD_INTEGER = XSD + "integer"
_XSD_NONNEGATIVEINTEGER = XSD + "nonNegativeInteger"
_XSD_DECIMAL = XSD + "decimal"
_XSD_DATETIME = XSD + "dateTime"
_XSD_DATE = XSD + "date"
_XSD_BOOLEAN = XSD + "boolean"

_SCHEME = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")
_BNODE_LABEL = re.compile(r"[A-Za-z0-9_]+\Z")
_LANG = re.compile(r"[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*\Z")

# characters that may not appear raw inside an N-Triples IRIREF
_IRI_FORBIDDEN = {c: f"%{c:02X}" for c in range(0x21)}
_IRI_FORBIDDEN.update({ord(c): f"%{ord(c):02X}" for c in '<>"{}|^`\\'})
# plus controls and Unicode blanks, which common parsers choke on
_IRI_FORBIDDEN.update(
    {cp: "".join(f"%{b:02X}" for b in chr(cp).encode("utf-8")) for cp in range(0x7F, 0x3001) if cp < 0xA1 or chr(cp).isspace()}
)


class IRI(NamedTuple):
    """An IRI term. A one-field tuple so that hashing and equality run in C."""

    value: str

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __post_init__(self):
        if not _BNODE_LABEL.match(self.label):
            raise ValueError(f"invalid blank node label {self.label!r}")


class _LiteralFields(NamedTuple):
    lexical: str
    datatype: str
    lang: Optional[str]


class Literal(_LiteralFields):
    """A literal with exactly one of a datatype or a language tag.

    Plain literals get ``xsd:string``; language-tagged ones report
    ``rdf:langString`` as their datatype. Literals are built by the million,
    so this is a tuple with a validating constructor rather than a dataclass.
    """

    __slots__ = ()

    def __new__(cls, lexical: str, datatype: str = XSD_STRING, lang: Optional[str] = None):
        if lang is not None:
            if datatype not in (XSD_STRING, RDF_LANGSTRING):
                raise ValueError("a literal cannot carry both a datatype and a language tag")
            if not _LANG.match(lang):
                raise ValueError(f"invalid language tag {lang!r}")
            return tuple.__new__(cls, (lexical, RDF_LANGSTRING, lang.lower()))
        if datatype == RDF_LANGSTRING:
            raise ValueError("rdf:langString literal needs a language tag")
        return tuple.__new__(cls, (lexical, datatype, None))


Term = Union[IRI, BlankNode, Literal]


class Triple(NamedTuple):
    subject: Union[IRI, BlankNode]
    predicate: IRI
    object: Term


class Quad(NamedTuple):
    triple: Triple
    graph: Optional[IRI] = None


def is_absolute_iri(s: str) -> bool:
    return bool(_SCHEME.match(s))


def mk_iri(s: str) -> IRI:
    """Build an IRI term, percent-encoding characters N-Triples forbids.

    Existing ``%XX`` escapes are left alone, so the encoding is idempotent.
    """
    if not s or not _SCHEME.match(s):
        raise InvalidIri(f"not an absolute IRI: {s!r}")
    return IRI(s.translate(_IRI_FORBIDDEN))


def lang_literal(text: str, lang: str = "en") -> Literal:
    return Literal(text, lang=lang)


def typed(lexical: str, datatype: str) -> Literal:
    return Literal(lexical, datatype)


def integer_literal(value: Union[int, str]) -> Literal:
    return Literal(str(int(value)), _XSD_INTEGER)


def non_negative_integer_literal(value: int) -> Literal:
    if value < 0:
        raise ValueError(f"negative value {value} for xsd:nonNegativeInteger")
    return Literal(str(int(value)), _XSD_NONNEGATIVEINTEGER)


def canonical_decimal(value: Union[Decimal, str, int]) -> str:
    """Canonical xsd:decimal lexical form: ``0.5``, ``1.0``, ``-12.25``."""
    try:
        d = value if isinstance(value, Decimal) else Decimal(str(value))
    except InvalidOperation as exc:
        raise ValueError(f"not a decimal: {value!r}") from exc
    if not d.is_finite():
        raise ValueError(f"not a finite decimal: {value!r}")
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0")
        if s.endswith("."):
            s += "0"
    else:
        s += ".0"
    if s[0] == "-" and set(s[1:]) <= {"0", "."}:
        s = s[1:]
    return s


def decimal_literal(value: Union[Decimal, str, int]) -> Literal:
    return Literal(canonical_decimal(value), _XSD_DECIMAL)


def boolean_literal(value: Union[bool, str]) -> Literal:
    if isinstance(value, str):
        low = value.strip().lower()
        if low in ("true", "1"):
            value = True
        elif low in ("false", "0"):
            value = False
        else:
            raise ValueError(f"not a boolean: {value!r}")
    return Literal("true" if value else "false", _XSD_BOOLEAN)


def canonical_datetime(value: datetime) -> str:
    if value.tzinfo is None:
        value = value.replace(tzinfo=timezone.utc)
    s = value.astimezone(timezone.utc).isoformat()[:-6]  # drop "+00:00"
    if "." in s:
        s = s.rstrip("0")
    return s + "Z"


def datetime_literal(value: datetime) -> Literal:
    return Literal(canonical_datetime(value), _XSD_DATETIME)


def date_literal(value: date) -> Literal:
    return Literal(value.isoformat(), _XSD_DATE)
