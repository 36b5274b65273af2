"""External vocabularies and the per-run namespace layout."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

from .rdf import IRI, mk_iri

DEFAULT_BASE_IRI = "http://nell2rdf.example/"
BASE_IRI_ENV = "NELL2RDF_BASE_IRI"


class Namespace(str):
    """A string prefix that builds IRI terms by attribute or item access."""

    def term(self, name: str) -> IRI:
        return IRI(self + name)

    def __getattr__(self, name: str) -> IRI:
        if name.startswith("__"):
            raise AttributeError(name)
        return IRI(self + name)

    def __getitem__(self, name):  # type: ignore[override]
        if isinstance(name, str):
            return IRI(self + name)
        return str.__getitem__(self, name)


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
SKOS = Namespace("http://www.w3.org/2004/02/skos/core#")
PROV = Namespace("http://www.w3.org/ns/prov#")
VOID = Namespace("http://rdfs.org/ns/void#")
DCAT = Namespace("http://www.w3.org/ns/dcat#")
DCTERMS = Namespace("http://purl.org/dc/terms/")
NDFLUENTS = Namespace("http://www.emse.fr/~zimmermann/Ontologies/ndfluents.ttl#")

# The singleton-property vocabulary lives in the rdf: namespace.
SINGLETON_PROPERTY_OF = RDF.singletonPropertyOf
CONTEXTUAL_PART_OF = NDFLUENTS.contextualPartOf
CONTEXTUAL_EXTENT = NDFLUENTS.contextualExtent

RDF_TYPE = RDF.type


@dataclass(frozen=True)
class Namespaces:
    """Every IRI space minted for one run, derived from a single base IRI."""

    base: str

    def __post_init__(self):
        base = mk_iri(self.base).value
        if not base.endswith(("/", "#")):
            base += "/"
        object.__setattr__(self, "base", base)

    @classmethod
    def from_env(cls, base: str | None = None) -> "Namespaces":
        return cls(base or os.environ.get(BASE_IRI_ENV) or DEFAULT_BASE_IRI)

    @cached_property
    def resource(self) -> Namespace:
        return Namespace(self.base + "resource/")

    @cached_property
    def ontology(self) -> Namespace:
        """Categories and relations of the NELL ontology."""
        return Namespace(self.base + "ontology/")

    @cached_property
    def vocab(self) -> Namespace:
        """The converter's own terms: provenance vocabulary and NELL-specific ontology predicates."""
        return Namespace(self.base + "prov/ontology/")

    @cached_property
    def belief(self) -> str:
        return self.base + "belief/"

    @cached_property
    def graph(self) -> str:
        return self.base + "graph/"

    @cached_property
    def context(self) -> str:
        return self.base + "context/"

    @cached_property
    def execution(self) -> str:
        return self.base + "execution/"

    @cached_property
    def component(self) -> Namespace:
        return Namespace(self.base + "component/")

    @cached_property
    def dataset(self) -> Namespace:
        return Namespace(self.base + "dataset/")


_UNRESERVED = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-._")


def _is_ucschar(cp: int) -> bool:
    if cp < 0xA0:
        return False
    if cp <= 0xFFEF:
        return not (0xD800 <= cp <= 0xF8FF or 0xFDD0 <= cp <= 0xFDEF)
    return (cp & 0xFFFF) < 0xFFFE and cp < 0xF0000


def encode_segment(text: str) -> str:
    """Percent-encode one IRI path segment.

    ASCII letters, digits and ``-._`` pass through, as does any non-ASCII
    character that IRIs allow unescaped; everything else (including ``/``, ``%``, ``~`` and ``:``) is
    encoded, which keeps the mapping injective.
    """
    if all(c in _UNRESERVED for c in text):
        return text
    out = []
    for c in text:
        if c in _UNRESERVED or (_is_ucschar(ord(c)) and not c.isspace()):
            out.append(c)
        else:
            out.append("".join(f"%{b:02X}" for b in c.encode("utf-8")))
    return "".join(out)
