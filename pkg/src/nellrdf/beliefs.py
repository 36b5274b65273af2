"""Base statement and auxiliary triples of a NELL belief (fields 1-3, 7-12)."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

from .errors import EmptyToken
from .ingest import NellBelief
from .ontology import CONCEPT_PREFIX, OntologyIndex, local_name, ontology_iri
from .rdf import IRI, Literal, Triple
from .vocab import RDF_TYPE, RDFS, SKOS, Namespaces, encode_segment

# A base statement is a plain triple; the alias documents intent.
BaseStatement = Triple

GENERALIZATIONS = "generalizations"


@lru_cache(maxsize=1 << 16)
def mint_entity_iri(token: str, base: str) -> IRI:
    """Mint the IRI of a NELL entity token.

    ``concept:city:paris`` becomes ``<base>city/paris``: every ``:``-separated
    segment after the ``concept:`` prefix is percent-encoded and becomes a
    path segment. Tokens without the prefix live under ``<base>~/`` (a raw
    ``~`` never survives segment encoding), so the mapping stays injective.
    """
    if not token:
        raise EmptyToken("empty entity token")
    if not base.endswith(("/", "#")):
        base += "/"
    if token.startswith(CONCEPT_PREFIX):
        path = "/".join(encode_segment(seg) for seg in token[len(CONCEPT_PREFIX) :].split(":"))
    else:
        path = "~/" + encode_segment(token)
    return IRI(base + path)


def is_generalization(relation: str) -> bool:
    return local_name(relation).lower() == GENERALIZATIONS


def predicate_iri(relation: str, ns: Namespaces) -> IRI:
    if is_generalization(relation):
        return RDF_TYPE
    return ontology_iri(relation, ns)


def object_term(belief: NellBelief, index: OntologyIndex, ns: Namespaces):
    """Field 3 as an RDF term.

    Generalizations point at a category; relations with a datatype range get
    a typed literal; other ``concept:`` tokens are entities; anything else is
    kept as a plain literal.
    """
    value = belief.value
    if is_generalization(belief.relation):
        return ontology_iri(value, ns)
    datatype = index.range_datatype(belief.relation)
    if datatype is not None:
        return Literal(value, datatype)
    if value.startswith(CONCEPT_PREFIX):
        return mint_entity_iri(value, ns.resource)
    return Literal(value)


def translate_belief(
    b: NellBelief, ns: Namespaces, index: Optional[OntologyIndex] = None, diagnostics: Optional[list] = None
) -> Tuple[BaseStatement, List[Triple]]:
    index = index if index is not None else OntologyIndex()
    subject = mint_entity_iri(b.entity, ns.resource)
    obj = object_term(b, index, ns)
    statement = Triple(subject, predicate_iri(b.relation, ns), obj)

    aux: List[Triple] = [Triple(subject, RDFS.label, Literal(label)) for label in b.entity_labels]
    if b.entity_best_label is not None:
        aux.append(Triple(subject, SKOS.prefLabel, Literal(b.entity_best_label)))
    aux.extend(Triple(subject, RDF_TYPE, ontology_iri(c, ns)) for c in b.entity_categories)

    if isinstance(obj, IRI):
        aux.extend(Triple(obj, RDFS.label, Literal(label)) for label in b.value_labels)
        if b.value_best_label is not None:
            aux.append(Triple(obj, SKOS.prefLabel, Literal(b.value_best_label)))
        aux.extend(Triple(obj, RDF_TYPE, ontology_iri(c, ns)) for c in b.value_categories)
    elif b.value_labels or b.value_best_label or b.value_categories:
        if diagnostics is not None:
            diagnostics.append(f"literal value {b.value!r}: value labels/categories dropped")
    return statement, aux
