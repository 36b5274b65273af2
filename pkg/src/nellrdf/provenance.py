"""PROV-O based provenance metadata for beliefs and component executions.

:class:`ProvVocabulary` holds the T-Box as data (class and property tables);
:func:`emit_ontology` renders it and the ``emit_*`` functions produce the
A-Box for one belief. Every intermediate node gets a minted IRI derived from
its execution IRI plus a role and an ordinal, so no blank nodes are emitted.
"""

from __future__ import annotations

import hashlib
import warnings
from decimal import Decimal
from typing import Dict, List, Optional, Tuple

from . import grammar as g
from .errors import PromotionThresholdWarning
from .ingest import PROMOTION_THRESHOLD, BeliefKind
from .rdf import (
    IRI,
    Literal,
    Triple,
    date_literal,
    datetime_literal,
    decimal_literal,
    integer_literal,
    lang_literal,
    non_negative_integer_literal,
    typed,
)
from .vocab import OWL, PROV, RDF, RDF_TYPE, RDFS, XSD, Namespaces

CE = "ComponentExecution"

# (class, superclass); a superclass without a prefix is a local class
CLASSES: List[Tuple[str, Optional[object]]] = [
    ("Belief", PROV.Entity),
    ("PromotedBelief", "Belief"),
    ("CandidateBelief", "Belief"),
    (CE, PROV.Activity),
    ("Component", PROV.SoftwareAgent),
    ("Token", OWL.Thing),
    ("RelationToken", "Token"),
    ("GeneralizationToken", "Token"),
    ("GeoToken", "Token"),
    *[(f"{c.value}Execution", CE) for c in g.ComponentId],
    ("MorphologicalPatternScoreTriple", None),
    ("PatternNbOfOccurrencesPair", None),
    ("NameLatLongTriple", None),
    ("TextUrlPair", None),
    ("Path", None),
    ("DirectionOfPath", None),
    ("RuleScoresTuple", None),
    ("Rule", None),
    ("Predicate", None),
]

OBJ, DATA = "object", "datatype"

# (property, kind, superproperty, domain, range)
PROPERTIES: List[Tuple[str, str, Optional[IRI], Optional[str], object]] = [
    ("generatedBy", OBJ, PROV.wasGeneratedBy, "Belief", CE),
    ("associatedWith", OBJ, PROV.wasAssociatedWith, CE, "Component"),
    ("iterationOfPromotion", DATA, None, "PromotedBelief", XSD.integer),
    ("probabilityOfBelief", DATA, None, "PromotedBelief", XSD.decimal),
    ("iteration", DATA, None, CE, XSD.integer),
    ("probability", DATA, None, CE, XSD.decimal),
    ("hasToken", OBJ, None, CE, "Token"),
    ("source", DATA, None, CE, XSD.string),
    ("atTime", DATA, None, CE, XSD.dateTime),
    ("tokenEntity", DATA, None, "Token", XSD.string),
    ("relationValue", DATA, None, "RelationToken", XSD.string),
    ("generalizationValue", DATA, None, "GeneralizationToken", XSD.string),
    # AliasMatcher
    ("freebaseDate", DATA, None, "AliasMatcherExecution", XSD.date),
    # CMC
    ("morphologicalPattern", OBJ, None, "CMCExecution", "MorphologicalPatternScoreTriple"),
    ("morphologicalPatternName", DATA, None, "MorphologicalPatternScoreTriple", XSD.string),
    ("morphologicalPatternValue", DATA, None, "MorphologicalPatternScoreTriple", XSD.string),
    ("morphologicalPatternScore", DATA, None, "MorphologicalPatternScoreTriple", XSD.decimal),
    # CPL
    ("patternOccurrences", OBJ, None, "CPLExecution", "PatternNbOfOccurrencesPair"),
    ("textualPattern", DATA, None, "PatternNbOfOccurrencesPair", XSD.string),
    ("nbOfOccurrences", DATA, None, "PatternNbOfOccurrencesPair", XSD.nonNegativeInteger),
    # KbManipulation
    ("oldBug", DATA, None, "KbManipulationExecution", XSD.string),
    # LatLong (the coordinate properties are shared with GeoToken)
    ("location", OBJ, None, "LatLongExecution", "NameLatLongTriple"),
    ("name", DATA, None, "NameLatLongTriple", RDF.langString),
    ("latitudeValue", DATA, None, "NameLatLongTriple", XSD.decimal),
    ("longitudeValue", DATA, None, "NameLatLongTriple", XSD.decimal),
    # MBL
    ("promotedEntity", DATA, None, "MBLExecution", XSD.string),
    ("promotedEntityCategory", DATA, None, "MBLExecution", XSD.string),
    ("promotedRelation", DATA, None, "MBLExecution", XSD.string),
    ("promotedValue", DATA, None, "MBLExecution", XSD.string),
    ("promotedValueCategory", DATA, None, "MBLExecution", XSD.string),
    # OE; url has no domain because SEAL executions use it too
    ("textUrl", OBJ, None, "OEExecution", "TextUrlPair"),
    ("text", DATA, None, "TextUrlPair", RDF.langString),
    ("url", DATA, None, None, XSD.anyURI),
    # OntologyModifier
    ("ontologyModification", DATA, None, "OntologyModifierExecution", XSD.string),
    ("modificationKind", DATA, None, "OntologyModifierExecution", XSD.string),
    # PRA
    ("relationPath", OBJ, None, "PRAExecution", "Path"),
    ("direction", OBJ, None, "Path", "DirectionOfPath"),
    ("score", DATA, None, "Path", XSD.decimal),
    ("listOfRelations", OBJ, None, "Path", RDF.List),
    # RL
    ("ruleScores", OBJ, None, "RLExecution", "RuleScoresTuple"),
    ("rule", OBJ, None, "RuleScoresTuple", "Rule"),
    ("accuracy", DATA, None, "RuleScoresTuple", XSD.decimal),
    ("nbCorrect", DATA, None, "RuleScoresTuple", XSD.nonNegativeInteger),
    ("nbIncorrect", DATA, None, "RuleScoresTuple", XSD.nonNegativeInteger),
    ("nbUnknown", DATA, None, "RuleScoresTuple", XSD.nonNegativeInteger),
    ("variable", DATA, None, "Rule", XSD.string),
    ("valueOfVariable", DATA, None, "Rule", XSD.string),
    ("predicate", OBJ, None, "Rule", "Predicate"),
    ("predicateName", DATA, None, "Predicate", XSD.string),
    ("firstVariable", DATA, None, "Predicate", XSD.string),
    ("secondVariable", DATA, None, "Predicate", XSD.string),
    # Semparse
    ("sentence", DATA, None, "SemparseExecution", XSD.string),
    # SpreadsheetEdits
    *[(p, DATA, None, "SpreadsheetEditsExecution", XSD.string) for p in ("user", "entity", "relation", "value", "action", "file")],
]

DIRECTIONS = {g.Direction.Forward: "forward", g.Direction.Backward: "backward"}


class ProvVocabulary:
    """IRIs of every provenance class, property and fixed individual."""

    def __init__(self, ns: Namespaces):
        self.ns = ns
        v = ns.vocab
        self.classes: Dict[str, IRI] = {name: v.term(name) for name, _ in CLASSES}
        self.properties: Dict[str, IRI] = {name: v.term(p) for name, *_ in PROPERTIES for p in [name]}
        self.component_iris: Dict[g.ComponentId, IRI] = {c: ns.component.term(c.value) for c in g.ComponentId}
        self.execution_classes: Dict[g.ComponentId, IRI] = {c: self.classes[f"{c.value}Execution"] for c in g.ComponentId}
        self.directions: Dict[g.Direction, IRI] = {d: v.term(name) for d, name in DIRECTIONS.items()}
        self.component_iteration = v.ComponentIteration

    def c(self, name: str) -> IRI:
        return self.classes[name]

    def p(self, name: str) -> IRI:
        return self.properties[name]

    def _resolve(self, ref) -> IRI:
        return self.classes[ref] if isinstance(ref, str) else ref

    def declared_terms(self) -> set:
        return {t.subject for t in emit_ontology(self)}


def emit_ontology(v: ProvVocabulary) -> List[Triple]:
    """The provenance T-Box: class and property hierarchy, domains, ranges."""
    out: List[Triple] = []
    for name, sup in CLASSES:
        cls = v.c(name)
        out.append(Triple(cls, RDF_TYPE, OWL.Class))
        if sup is not None:
            out.append(Triple(cls, RDFS.subClassOf, v._resolve(sup)))
    out.append(Triple(v.component_iteration, RDF_TYPE, OWL.Class))
    out.append(Triple(v.component_iteration, OWL.equivalentClass, v.c(CE)))
    for name, kind, sup, domain, rng in PROPERTIES:
        prop = v.p(name)
        out.append(Triple(prop, RDF_TYPE, OWL.ObjectProperty if kind == OBJ else OWL.DatatypeProperty))
        if sup is not None:
            out.append(Triple(prop, RDFS.subPropertyOf, sup))
        if domain is not None:
            out.append(Triple(prop, RDFS.domain, v._resolve(domain)))
        out.append(Triple(prop, RDFS.range, v._resolve(rng)))
    for d in g.Direction:
        out.append(Triple(v.directions[d], RDF_TYPE, v.c("DirectionOfPath")))
    for c in g.ComponentId:
        out.append(Triple(v.component_iris[c], RDF_TYPE, v.c("Component")))
        out.append(Triple(v.component_iris[c], RDFS.label, Literal(c.value)))
    return out


def emit_belief_node(
    attachment: IRI,
    kind: BeliefKind,
    iteration: Optional[int] = None,
    probability: Optional[Decimal] = None,
    vocab: Optional[ProvVocabulary] = None,
    lint: bool = True,
) -> List[Triple]:
    v = vocab or ProvVocabulary(Namespaces.from_env())
    if kind is BeliefKind.CANDIDATE:
        return [Triple(attachment, RDF_TYPE, v.c("CandidateBelief"))]
    if iteration is None or probability is None:
        raise ValueError("promoted beliefs need an iteration and a probability")
    if lint and probability < PROMOTION_THRESHOLD:
        warnings.warn(
            PromotionThresholdWarning(f"{attachment.value}: probability {probability} < {PROMOTION_THRESHOLD}"),
            stacklevel=2,
        )
    return [
        Triple(attachment, RDF_TYPE, v.c("PromotedBelief")),
        Triple(attachment, v.p("iterationOfPromotion"), integer_literal(iteration)),
        Triple(attachment, v.p("probabilityOfBelief"), decimal_literal(probability)),
    ]


def execution_iri(ns: Namespaces, belief_hash: str, e: g.ComponentExecution, index: int) -> IRI:
    key = f"{belief_hash}|{e.component.value}|{e.iteration}|{index}"
    return IRI(ns.execution + hashlib.sha256(key.encode("utf-8")).hexdigest()[:32])


def emit_token(exec_node: IRI, t: g.Token, vocab: ProvVocabulary) -> List[Triple]:
    v = vocab
    p = v.properties.__getitem__
    node = IRI(exec_node.value + "/token")
    if isinstance(t, g.RelationToken):
        cls, extra = "RelationToken", [Triple(node, p("relationValue"), Literal(t.relation_value))]
    elif isinstance(t, g.GeneralizationToken):
        cls, extra = "GeneralizationToken", [Triple(node, p("generalizationValue"), Literal(t.generalization_value))]
    else:
        cls, extra = "GeoToken", [
            Triple(node, p("latitudeValue"), decimal_literal(t.latitude)),
            Triple(node, p("longitudeValue"), decimal_literal(t.longitude)),
        ]
    return [
        Triple(exec_node, p("hasToken"), node),
        Triple(node, RDF_TYPE, v.c(cls)),
        Triple(node, p("tokenEntity"), Literal(t.entity)),
        *extra,
    ]


def _node(exec_node: IRI, *path) -> IRI:
    return IRI(exec_node.value + "/" + "/".join(str(p) for p in path))


def _alias_matcher(x, payload, v, p, add):
    add(Triple(x, p("freebaseDate"), date_literal(payload.freebase_date)))


def _cmc(x, payload, v, p, add):
    for i, m in enumerate(payload.patterns):
        n = _node(x, "morph", i)
        add(Triple(x, p("morphologicalPattern"), n))
        add(Triple(n, RDF_TYPE, v.c("MorphologicalPatternScoreTriple")))
        add(Triple(n, p("morphologicalPatternName"), Literal(m.name)))
        add(Triple(n, p("morphologicalPatternValue"), Literal(m.value)))
        add(Triple(n, p("morphologicalPatternScore"), decimal_literal(m.score)))


def _cpl(x, payload, v, p, add):
    for i, occ in enumerate(payload.patterns):
        n = _node(x, "pattern", i)
        add(Triple(x, p("patternOccurrences"), n))
        add(Triple(n, RDF_TYPE, v.c("PatternNbOfOccurrencesPair")))
        add(Triple(n, p("textualPattern"), Literal(occ.pattern)))
        add(Triple(n, p("nbOfOccurrences"), non_negative_integer_literal(occ.occurrences)))


def _kb_manipulation(x, payload, v, p, add):
    add(Triple(x, p("oldBug"), Literal(payload.old_bug)))


def _latlong(x, payload, v, p, add):
    for i, loc in enumerate(payload.locations):
        n = _node(x, "location", i)
        add(Triple(x, p("location"), n))
        add(Triple(n, RDF_TYPE, v.c("NameLatLongTriple")))
        add(Triple(n, p("name"), lang_literal(loc.name, loc.lang)))
        add(Triple(n, p("latitudeValue"), decimal_literal(loc.latitude)))
        add(Triple(n, p("longitudeValue"), decimal_literal(loc.longitude)))


_MBL_FIELDS = [
    ("promoted_entity", "promotedEntity"),
    ("promoted_entity_category", "promotedEntityCategory"),
    ("promoted_relation", "promotedRelation"),
    ("promoted_value", "promotedValue"),
    ("promoted_value_category", "promotedValueCategory"),
]


def _mbl(x, payload, v, p, add):
    for attr, prop in _MBL_FIELDS:
        value = getattr(payload, attr)
        if value is not None:
            add(Triple(x, p(prop), Literal(value)))


def _oe(x, payload, v, p, add):
    for i, pair in enumerate(payload.pairs):
        n = _node(x, "textUrl", i)
        add(Triple(x, p("textUrl"), n))
        add(Triple(n, RDF_TYPE, v.c("TextUrlPair")))
        add(Triple(n, p("text"), lang_literal(pair.text, pair.lang)))
        add(Triple(n, p("url"), typed(pair.url, XSD + "anyURI")))


def _ontology_modifier(x, payload, v, p, add):
    add(Triple(x, p("ontologyModification"), Literal(payload.modification)))
    add(Triple(x, p("modificationKind"), Literal(payload.modification_kind.value)))


def _pra(x, payload, v, p, add):
    for i, path in enumerate(payload.paths):
        n = _node(x, "path", i)
        add(Triple(x, p("relationPath"), n))
        add(Triple(n, RDF_TYPE, v.c("Path")))
        add(Triple(n, p("direction"), v.directions[path.direction]))
        add(Triple(n, p("score"), decimal_literal(path.score)))
        cells = [_node(x, "path", i, "list", j) for j in range(len(path.relations))]
        add(Triple(n, p("listOfRelations"), cells[0] if cells else RDF.nil))
        for j, rel in enumerate(path.relations):
            add(Triple(cells[j], RDF.first, Literal(rel)))
            add(Triple(cells[j], RDF.rest, cells[j + 1] if j + 1 < len(cells) else RDF.nil))


def _rl(x, payload, v, p, add):
    rs = payload.rule_scores
    tup, rule = _node(x, "ruleScores"), _node(x, "rule")
    add(Triple(x, p("ruleScores"), tup))
    add(Triple(tup, RDF_TYPE, v.c("RuleScoresTuple")))
    add(Triple(tup, p("rule"), rule))
    add(Triple(tup, p("accuracy"), decimal_literal(rs.accuracy)))
    add(Triple(tup, p("nbCorrect"), non_negative_integer_literal(rs.nb_correct)))
    add(Triple(tup, p("nbIncorrect"), non_negative_integer_literal(rs.nb_incorrect)))
    add(Triple(tup, p("nbUnknown"), non_negative_integer_literal(rs.nb_unknown)))
    add(Triple(rule, RDF_TYPE, v.c("Rule")))
    for var, value in rs.rule.variables:
        add(Triple(rule, p("variable"), Literal(var)))
        add(Triple(rule, p("valueOfVariable"), Literal(value)))
    for k, (name, first, second) in enumerate(rs.rule.predicates):
        n = _node(x, "rule", "predicate", k)
        add(Triple(rule, p("predicate"), n))
        add(Triple(n, RDF_TYPE, v.c("Predicate")))
        add(Triple(n, p("predicateName"), Literal(name)))
        add(Triple(n, p("firstVariable"), Literal(first)))
        add(Triple(n, p("secondVariable"), Literal(second)))


def _seal(x, payload, v, p, add):
    add(Triple(x, p("url"), typed(payload.url, XSD + "anyURI")))


def _semparse(x, payload, v, p, add):
    add(Triple(x, p("sentence"), Literal(payload.sentence)))


def _spreadsheet_edits(x, payload, v, p, add):
    for prop in ("user", "entity", "relation", "value", "action", "file"):
        add(Triple(x, p(prop), Literal(getattr(payload, prop))))


PAYLOAD_EMITTERS = {
    g.AliasMatcherPayload: _alias_matcher,
    g.CMCPayload: _cmc,
    g.CPLPayload: _cpl,
    g.KbManipulationPayload: _kb_manipulation,
    g.LatLongPayload: _latlong,
    g.LEPayload: lambda *args: None,  # LE records carry nothing beyond the generic triples
    g.MBLPayload: _mbl,
    g.OEPayload: _oe,
    g.OntologyModifierPayload: _ontology_modifier,
    g.PRAPayload: _pra,
    g.RLPayload: _rl,
    g.SEALPayload: _seal,
    g.SemparsePayload: _semparse,
    g.SpreadsheetEditsPayload: _spreadsheet_edits,
}


def _payload(x: IRI, payload, v: ProvVocabulary) -> List[Triple]:
    out: List[Triple] = []
    try:
        emit = PAYLOAD_EMITTERS[type(payload)]
    except KeyError:
        raise TypeError(f"unknown payload {payload!r}") from None
    emit(x, payload, v, v.properties.__getitem__, out.append)
    return out


def emit_execution(
    attachment: IRI,
    e: g.ComponentExecution,
    vocab: ProvVocabulary,
    belief_hash: Optional[str] = None,
    index: int = 0,
) -> List[Triple]:
    """Generic execution triples, then the token, then the component payload."""
    v = vocab
    p = v.properties.__getitem__
    if belief_hash is None:
        belief_hash = hashlib.sha256(attachment.value.encode("utf-8")).hexdigest()[:32]
    x = execution_iri(v.ns, belief_hash, e, index)
    out = [
        Triple(attachment, p("generatedBy"), x),
        Triple(x, RDF_TYPE, v.execution_classes[e.component]),
        Triple(x, p("associatedWith"), v.component_iris[e.component]),
    ]
    if e.iteration is not None:
        out.append(Triple(x, p("iteration"), integer_literal(e.iteration)))
    if e.probability is not None:
        out.append(Triple(x, p("probability"), decimal_literal(e.probability)))
    out.append(Triple(x, p("atTime"), datetime_literal(e.time)))
    out.append(Triple(x, p("source"), Literal(e.source)))
    out.extend(emit_token(x, e.token, v))
    out.extend(_payload(x, e.payload, v))
    return out


def emit_metadata(
    attachment: IRI,
    kind: BeliefKind,
    executions: List[g.ComponentExecution],
    vocab: ProvVocabulary,
    belief_hash: str,
    iteration: Optional[int] = None,
    probability: Optional[Decimal] = None,
) -> List[Triple]:
    """All provenance triples for one belief."""
    out = emit_belief_node(attachment, kind, iteration, probability, vocab, lint=False)
    for i, e in enumerate(executions):
        out.extend(emit_execution(attachment, e, vocab, belief_hash, i))
    return out
