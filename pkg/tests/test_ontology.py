from __future__ import annotations

import random

import pytest

from nellrdf.ingest import ONTOLOGY_PREDICATES, OntologyAssertion
from nellrdf.ontology import RULES, build_index, ontology_iri, translate_ontology, translate_ontology_assertion
from nellrdf.rdf import IRI, BlankNode, triple_nt
from nellrdf.vocab import Namespaces

from ontology_golden import CASES, MEMBERSHIP

NS = Namespaces("http://nell2rdf.example/")
INDEX = build_index([OntologyAssertion(*m) for m in MEMBERSHIP])


@pytest.mark.parametrize("subject, predicate, obj, expected", CASES, ids=[f"{c[1]}-{c[2]}" for c in CASES])
def test_rule_output(subject, predicate, obj, expected):
    got = translate_ontology_assertion(OntologyAssertion(subject, predicate, obj), INDEX, NS, [])
    assert [triple_nt(t) for t in got] == expected


def test_golden_cases_cover_every_predicate():
    assert {c[1] for c in CASES} == ONTOLOGY_PREDICATES == set(RULES)


def test_conditional_fallthroughs_leave_a_diagnostic():
    for s, p, o in [("concept:hascapital", "antireflexive", "false"), ("concept:city", "memberofsets", "x"), ("concept:zz", "mutexpredicates", "concept:y")]:
        notes: list = []
        translate_ontology_assertion(OntologyAssertion(s, p, o), INDEX, NS, notes)
        assert len(notes) == 1


def test_bad_boolean_is_reported_not_raised():
    notes: list = []
    assert translate_ontology_assertion(OntologyAssertion("concept:x", "visible", "maybe"), INDEX, NS, notes) == []
    assert notes


def test_row_order_does_not_matter():
    rows = [OntologyAssertion(s, p, o) for s, p, o, _ in CASES] + [OntologyAssertion(*m) for m in MEMBERSHIP]
    _, first = translate_ontology(rows, NS)
    shuffled = rows[:]
    random.Random(3).shuffle(shuffled)
    _, second = translate_ontology(shuffled, NS)
    assert sorted(map(triple_nt, first)) == sorted(map(triple_nt, second))
    assert not any(isinstance(x, BlankNode) for t in first for x in t)


def test_ontology_iri_forms():
    assert ontology_iri("concept:city", NS) == IRI("http://nell2rdf.example/ontology/city")
    assert ontology_iri("city", NS) == IRI("http://nell2rdf.example/ontology/city")
    assert ontology_iri("xsd:string", NS) == IRI("http://www.w3.org/2001/XMLSchema#string")
    assert ontology_iri("concept:a b/c", NS) == IRI("http://nell2rdf.example/ontology/a%20b%2Fc")
    assert ontology_iri("http://example.org/x", NS) == IRI("http://example.org/x")


def test_index_records_datatype_ranges():
    index = build_index([OntologyAssertion("concept:haspopulation", "range", "xsd:integer")])
    assert index.range_datatype("concept:haspopulation") == "http://www.w3.org/2001/XMLSchema#integer"
    assert index.range_datatype("concept:other") is None
