"""Translation of NELL ontology rows into RDFS/OWL.

Translation is two-pass: :func:`build_index` records which subjects are
categories or relations (needed by the ``mutexpredicates`` guard) and which
relations have a datatype range (needed later by belief translation);
:func:`translate_ontology_assertion` then applies one rule per NELL predicate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Set

from .ingest import ONTOLOGY_PREDICATES, OntologyAssertion
from .rdf import IRI, Literal, Triple, boolean_literal, is_absolute_iri, lang_literal, mk_iri
from .vocab import OWL, RDF, RDF_TYPE, RDFS, XSD, Namespaces, encode_segment

log = logging.getLogger(__name__)

CONCEPT_PREFIX = "concept:"


def local_name(token: str) -> str:
    return token[len(CONCEPT_PREFIX) :] if token.startswith(CONCEPT_PREFIX) else token


def ontology_iri(token: str, ns: Namespaces) -> IRI:
    """IRI of a category, relation or datatype named in the ontology."""
    return _ontology_iri(token, ns.ontology)


@lru_cache(maxsize=1 << 16)
def _ontology_iri(token: str, base: str) -> IRI:
    if token.startswith("xsd:"):
        return XSD.term(token[4:])
    if not token.startswith(CONCEPT_PREFIX) and is_absolute_iri(token) and "/" in token:
        return mk_iri(token)
    return IRI(base + encode_segment(local_name(token)))


def is_datatype(iri: IRI) -> bool:
    return iri.value.startswith(XSD) or iri.value == RDF.langString.value


@dataclass
class OntologyIndex:
    """What pass 1 learns about the ontology; read-only afterwards."""

    categories: Set[str] = field(default_factory=set)
    relations: Set[str] = field(default_factory=set)
    ranges: Dict[str, str] = field(default_factory=dict)

    def range_datatype(self, relation: str) -> Optional[str]:
        """The XSD datatype a relation ranges over, if any."""
        rng = self.ranges.get(local_name(relation))
        if rng is not None and rng.startswith("xsd:"):
            return XSD + rng[4:]
        return None


def build_index(assertions: Iterable[OntologyAssertion]) -> OntologyIndex:
    index = OntologyIndex()
    for a in assertions:
        name = local_name(a.subject)
        if a.predicate == "memberofsets":
            obj = local_name(a.object).lower()
            if obj == "rtwcategory":
                index.categories.add(name)
            elif obj == "rtwrelation":
                index.relations.add(name)
        elif a.predicate == "range":
            index.ranges[name] = a.object
    return index


Diagnostics = Optional[list]
RuleFn = Callable[[OntologyAssertion, IRI, OntologyIndex, Namespaces, Diagnostics], List[Triple]]


@dataclass(frozen=True)
class TranslationRule:
    nell_predicate: str
    kind: str  # "direct" or "conditional"
    apply: RuleFn


def _note(diagnostics: Diagnostics, message: str) -> None:
    if diagnostics is not None:
        diagnostics.append(message)
    else:
        log.info(message)


def _bool_rule(prop: str) -> RuleFn:
    def rule(a, subj, index, ns, diagnostics):
        try:
            value = boolean_literal(a.object)
        except ValueError:
            _note(diagnostics, f"{a.predicate}: {a.object!r} is not a boolean")
            return []
        return [Triple(subj, ns.vocab.term(prop), value)]

    return rule


def _object_rule(prop: Callable[[Namespaces], IRI]) -> RuleFn:
    def rule(a, subj, index, ns, diagnostics):
        return [Triple(subj, prop(ns), ontology_iri(a.object, ns))]

    return rule


def _antireflexive(a, subj, index, ns, diagnostics):
    if a.object.strip().lower() == "true":
        return [Triple(subj, RDF_TYPE, OWL.IrreflexiveProperty)]
    _note(diagnostics, f"antireflexive {a.object!r} on {a.subject}: nothing emitted")
    return []


def _description(a, subj, index, ns, diagnostics):
    return [Triple(subj, RDFS.comment, lang_literal(a.object, "en"))]


def _humanformat(a, subj, index, ns, diagnostics):
    return [Triple(subj, ns.vocab.humanFormat, Literal(a.object))]


def _memberofsets(a, subj, index, ns, diagnostics):
    obj = local_name(a.object).lower()
    if obj == "rtwcategory":
        return [Triple(subj, RDF_TYPE, RDFS.Class)]
    if obj == "rtwrelation":
        return [Triple(subj, RDF_TYPE, RDF.Property)]
    _note(diagnostics, f"memberofsets {a.object!r} on {a.subject}: kept as vocab:memberOfSets")
    return [Triple(subj, ns.vocab.memberOfSets, ontology_iri(a.object, ns))]


def _mutexpredicates(a, subj, index, ns, diagnostics):
    name = local_name(a.subject)
    if name in index.categories:
        return [Triple(subj, OWL.disjointWith, ontology_iri(a.object, ns))]
    if name in index.relations:
        return [Triple(subj, OWL.propertyDisjointWith, ontology_iri(a.object, ns))]
    _note(diagnostics, f"mutexpredicates on {a.subject}: subject is neither a category nor a relation")
    return []


def _nrofvalues(a, subj, index, ns, diagnostics):
    if a.object.strip() == "1":
        return [Triple(subj, RDF_TYPE, OWL.FunctionalProperty)]
    return []


RULES: Dict[str, TranslationRule] = {
    r.nell_predicate: r
    for r in [
        TranslationRule("antireflexive", "conditional", _antireflexive),
        TranslationRule("antisymmetric", "direct", _bool_rule("antisymmetric")),
        TranslationRule("description", "direct", _description),
        TranslationRule("domain", "direct", _object_rule(lambda ns: RDFS.domain)),
        TranslationRule("domainwithinrange", "direct", _bool_rule("domainWithinRange")),
        TranslationRule("generalizations", "direct", _object_rule(lambda ns: RDFS.subClassOf)),
        TranslationRule("humanformat", "direct", _humanformat),
        TranslationRule("instancetype", "direct", _object_rule(lambda ns: ns.vocab.instanceType)),
        TranslationRule("inverse", "direct", _object_rule(lambda ns: OWL.inverseOf)),
        TranslationRule("memberofsets", "conditional", _memberofsets),
        TranslationRule("mutexpredicates", "conditional", _mutexpredicates),
        TranslationRule("nrofvalues", "conditional", _nrofvalues),
        TranslationRule("populate", "direct", _bool_rule("populate")),
        TranslationRule("range", "direct", _object_rule(lambda ns: RDFS.range)),
        TranslationRule("rangewithindomain", "direct", _bool_rule("rangeWithinDomain")),
        TranslationRule("visible", "direct", _bool_rule("visible")),
    ]
}
assert set(RULES) == ONTOLOGY_PREDICATES


def translate_ontology_assertion(
    a: OntologyAssertion,
    index: Optional[OntologyIndex] = None,
    ns: Optional[Namespaces] = None,
    diagnostics: Diagnostics = None,
) -> List[Triple]:
    ns = ns or Namespaces.from_env()
    index = index if index is not None else OntologyIndex()
    return RULES[a.predicate].apply(a, ontology_iri(a.subject, ns), index, ns, diagnostics)


def custom_predicate_declarations(ns: Namespaces) -> List[Triple]:
    """Declare the NELL-specific predicates that have no RDFS/OWL counterpart."""
    v = ns.vocab
    out = []
    for name in ("antisymmetric", "domainWithinRange", "populate", "rangeWithinDomain", "visible"):
        out += [Triple(v.term(name), RDF_TYPE, OWL.DatatypeProperty), Triple(v.term(name), RDFS.range, XSD.boolean)]
    out += [
        Triple(v.humanFormat, RDF_TYPE, OWL.DatatypeProperty),
        Triple(v.humanFormat, RDFS.range, XSD.string),
        Triple(v.instanceType, RDF_TYPE, OWL.ObjectProperty),
        Triple(v.memberOfSets, RDF_TYPE, OWL.ObjectProperty),
    ]
    return out


def translate_ontology(
    assertions: List[OntologyAssertion], ns: Namespaces, diagnostics: Diagnostics = None
) -> tuple[OntologyIndex, List[Triple]]:
    """Both passes over an in-memory ontology: index first, then emit."""
    index = build_index(assertions)
    triples = custom_predicate_declarations(ns)
    for a in assertions:
        triples.extend(translate_ontology_assertion(a, index, ns, diagnostics))
    return index, triples
