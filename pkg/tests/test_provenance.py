from __future__ import annotations

import warnings
from decimal import Decimal

import pytest

from nellrdf import grammar as g
from nellrdf.errors import PromotionThresholdWarning
from nellrdf.ingest import BeliefKind
from nellrdf.provenance import ProvVocabulary, emit_belief_node, emit_execution, emit_metadata, emit_ontology, execution_iri
from nellrdf.rdf import IRI, Literal, Triple
from nellrdf.vocab import OWL, PROV, RDF, RDF_TYPE, RDFS, Namespaces

NS = Namespaces("http://nell2rdf.example/")
V = ProvVocabulary(NS)
VOC = "http://nell2rdf.example/prov/ontology/"
B = IRI("http://nell2rdf.example/belief/21f2765e447b1e3a7812ca3cdaa74fb7")
H = "21f2765e447b1e3a7812ca3cdaa74fb7"
T = "time=2017-01-02T03:04:05Z"


def execution(name: str, source: str, token: str = "(concept:city:paris,concept:country:france)", extra: str = ""):
    (e,) = g.parse_candidate_source(f'[{name},{extra}{T},token={token},source="{source}"]')
    return e


def subclass_closure(triples, cls):
    sup = {t.subject: t.object for t in triples if t.predicate == RDFS.subClassOf}
    chain = []
    while cls in sup:
        cls = sup[cls]
        chain.append(cls)
    return chain


def test_class_hierarchy():
    onto = emit_ontology(V)
    assert subclass_closure(onto, IRI(VOC + "PromotedBelief")) == [IRI(VOC + "Belief"), PROV.Entity]
    assert subclass_closure(onto, IRI(VOC + "GeoToken")) == [IRI(VOC + "Token"), OWL.Thing]
    for c in g.ComponentId:
        assert subclass_closure(onto, IRI(VOC + c.value + "Execution")) == [IRI(VOC + "ComponentExecution"), PROV.Activity]
    assert Triple(IRI(VOC + "ComponentIteration"), OWL.equivalentClass, IRI(VOC + "ComponentExecution")) in onto


def test_property_hierarchy_and_ranges():
    onto = set(emit_ontology(V))
    assert Triple(IRI(VOC + "generatedBy"), RDFS.subPropertyOf, PROV.wasGeneratedBy) in onto
    assert Triple(IRI(VOC + "associatedWith"), RDFS.subPropertyOf, PROV.wasAssociatedWith) in onto
    assert Triple(IRI(VOC + "listOfRelations"), RDFS.range, RDF.List) in onto
    assert Triple(IRI(VOC + "Component"), RDFS.subClassOf, PROV.SoftwareAgent) in onto


def test_every_component_individual_is_declared():
    onto = set(emit_ontology(V))
    for c in g.ComponentId:
        assert Triple(IRI("http://nell2rdf.example/component/" + c.value), RDF_TYPE, IRI(VOC + "Component")) in onto


def test_promoted_belief_node():
    out = emit_belief_node(B, BeliefKind.PROMOTED, 1075, Decimal("0.95"), V)
    assert out == [
        Triple(B, RDF_TYPE, IRI(VOC + "PromotedBelief")),
        Triple(B, IRI(VOC + "iterationOfPromotion"), Literal("1075", "http://www.w3.org/2001/XMLSchema#integer")),
        Triple(B, IRI(VOC + "probabilityOfBelief"), Literal("0.95", "http://www.w3.org/2001/XMLSchema#decimal")),
    ]
    assert emit_belief_node(B, BeliefKind.CANDIDATE, vocab=V) == [Triple(B, RDF_TYPE, IRI(VOC + "CandidateBelief"))]


def test_promotion_lint_warns_below_threshold():
    with pytest.warns(PromotionThresholdWarning):
        emit_belief_node(B, BeliefKind.PROMOTED, 1, Decimal("0.85"), V)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        emit_belief_node(B, BeliefKind.PROMOTED, 1, Decimal("0.9"), V)


def test_execution_iri_is_stable_and_distinct():
    e = execution("CPL", "x|1")
    assert execution_iri(NS, H, e, 0) == execution_iri(NS, H, e, 0)
    assert execution_iri(NS, H, e, 0) != execution_iri(NS, H, e, 1)
    assert execution_iri(NS, H, e, 0).value.startswith("http://nell2rdf.example/execution/")


def test_generic_execution_triples_for_le():
    e = execution("LE", "ignored", extra="iteration=4,prob=0.5,")
    out = emit_execution(B, e, V, H)
    x = execution_iri(NS, H, e, 0)
    assert len(out) == 7 + 4  # generic + relation token, no payload
    assert out[:3] == [
        Triple(B, IRI(VOC + "generatedBy"), x),
        Triple(x, RDF_TYPE, IRI(VOC + "LEExecution")),
        Triple(x, IRI(VOC + "associatedWith"), IRI("http://nell2rdf.example/component/LE")),
    ]
    assert Triple(x, IRI(VOC + "source"), Literal("ignored")) in out


def test_token_shapes():
    geo = emit_execution(B, execution("LatLong", "Paris|48.85|2.35", token="(concept:city:paris,48.85,2.35)"), V, H)
    token_triples = [t for t in geo if t.subject.value.endswith("/token") or isinstance(t.object, IRI) and t.object.value.endswith("/token")]
    assert len(token_triples) == 5
    gen = g.parse_candidate_source(f'[CPL,{T},token=(concept:city:paris,concept:city),source="x|1"]', relation="concept:generalizations")[0]
    out = emit_execution(B, gen, V, H)
    assert Triple(IRI(execution_iri(NS, H, gen, 0).value + "/token"), RDF_TYPE, IRI(VOC + "GeneralizationToken")) in out


def test_cpl_patterns_are_separate_nodes():
    out = emit_execution(B, execution("CPL", "arg1 is in arg2|12;arg2 contains arg1|3"), V, H)
    patterns = [t.object for t in out if t.predicate == IRI(VOC + "patternOccurrences")]
    assert len(patterns) == 2 and len(set(patterns)) == 2
    counts = {t.object.lexical for t in out if t.predicate == IRI(VOC + "nbOfOccurrences")}
    assert counts == {"12", "3"}


def test_pra_relation_list_preserves_order():
    out = emit_execution(B, execution("PRA", "forward|0.7|r1|r2|r3"), V, H)
    first = {t.subject: t.object for t in out if t.predicate == RDF.first}
    rest = {t.subject: t.object for t in out if t.predicate == RDF.rest}
    (head,) = [t.object for t in out if t.predicate == IRI(VOC + "listOfRelations")]
    walked = []
    while head != RDF.nil:
        walked.append(first[head].lexical)
        head = rest[head]
    assert walked == ["r1", "r2", "r3"]
    assert Triple(IRI(execution_iri(NS, H, execution("PRA", "forward|0.7|r1|r2|r3"), 0).value + "/path/0"), IRI(VOC + "direction"), IRI(VOC + "forward")) in out


def test_rl_rule_structure():
    out = emit_execution(B, execution("RL", "scores|0.93|14|1|2;var|X|concept:city:paris;pred|p1|X|Y"), V, H)
    preds = {t.predicate.value[len(VOC):] for t in out if t.predicate.value.startswith(VOC)}
    assert {"ruleScores", "rule", "accuracy", "nbCorrect", "variable", "valueOfVariable", "predicate", "predicateName", "firstVariable", "secondVariable"} <= preds


SOURCES = {
    g.ComponentId.AliasMatcher: "2009-07-14",
    g.ComponentId.CMC: "suffix|ville|0.82",
    g.ComponentId.CPL: "x|1",
    g.ComponentId.KbManipulation: "old",
    g.ComponentId.LatLong: "Paris|48.85|2.35",
    g.ComponentId.LE: "",
    g.ComponentId.MBL: "concept:city:paris|concept:city",
    g.ComponentId.OE: "Paris is nice.|http://example.org/p",
    g.ComponentId.OntologyModifier: "relation|added",
    g.ComponentId.PRA: "backward|0.2|r4",
    g.ComponentId.RL: "scores|0.5|1|2|3;var|X|v;pred|p|X|Y",
    g.ComponentId.SEAL: "http://example.org/list",
    g.ComponentId.Semparse: "a sentence",
    g.ComponentId.SpreadsheetEdits: "alice|e|r|v|add|f.xls",
}


def test_every_emitted_term_is_declared():
    declared = {t.subject for t in emit_ontology(V)}
    for c, src in SOURCES.items():
        token = "(concept:city:paris,48.85,2.35)" if c is g.ComponentId.LatLong else "(a,b)"
        e = execution(c.value, src, token=token, extra="iteration=1,prob=0.5,")
        for t in emit_metadata(B, BeliefKind.PROMOTED, [e], V, H, 1, Decimal("0.95")):
            for term in (t.predicate, t.object if t.predicate == RDF_TYPE else None):
                if term is not None and term.value.startswith(VOC):
                    assert term in declared, term
