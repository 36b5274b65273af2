from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nellrdf.beliefs import mint_entity_iri, translate_belief
from nellrdf.errors import EmptyToken
from nellrdf.ingest import BeliefKind, OntologyAssertion, parse_belief_line
from nellrdf.ontology import build_index
from nellrdf.rdf import IRI, Literal, Triple
from nellrdf.vocab import RDF_TYPE, RDFS, SKOS, Namespaces

NS = Namespaces("http://nell2rdf.example/")
R = "http://nell2rdf.example/resource/"
O = "http://nell2rdf.example/ontology/"
SRC = '[CPL,time=2017-01-02T03:04:05Z,token=(a,b),source="x|1"]'


def belief(entity="concept:city:paris", relation="concept:citylocatedincountry", value="concept:country:france", **kw):
    f = [entity, relation, value, "1075", "0.95", "CPL", kw.get("el", "Paris"), kw.get("vl", "France,République"),
         kw.get("eb", "Paris"), kw.get("vb", "France"), kw.get("ec", "concept:city"), kw.get("vc", "concept:country"), SRC]
    return parse_belief_line("\t".join(f), BeliefKind.PROMOTED)


def test_mint_entity_iri():
    assert mint_entity_iri("concept:city:paris", R) == IRI(R + "city/paris")
    assert mint_entity_iri("concept:city:são paulo", R) == IRI(R + "city/são%20paulo")
    assert mint_entity_iri("concept:a/b:c", R) == IRI(R + "a%2Fb/c")
    assert mint_entity_iri("plain text", R) == IRI(R + "~/plain%20text")
    with pytest.raises(EmptyToken):
        mint_entity_iri("", R)


@given(st.text(min_size=1), st.text(min_size=1))
def test_mint_entity_iri_is_injective(a, b):
    if a != b:
        assert mint_entity_iri(a, R) != mint_entity_iri(b, R)


@given(st.text(min_size=1))
def test_minted_iris_survive_iri_normalization(token):
    from nellrdf.rdf import mk_iri

    iri = mint_entity_iri(token, R)
    assert mk_iri(iri.value) == iri


def test_statement_and_auxiliary_triples():
    s, aux = translate_belief(belief(), NS)
    paris, france = IRI(R + "city/paris"), IRI(R + "country/france")
    assert s == Triple(paris, IRI(O + "citylocatedincountry"), france)
    assert aux == [
        Triple(paris, RDFS.label, Literal("Paris")),
        Triple(paris, SKOS.prefLabel, Literal("Paris")),
        Triple(paris, RDF_TYPE, IRI(O + "city")),
        Triple(france, RDFS.label, Literal("France")),
        Triple(france, RDFS.label, Literal("République")),
        Triple(france, SKOS.prefLabel, Literal("France")),
        Triple(france, RDF_TYPE, IRI(O + "country")),
    ]


def test_generalization_becomes_rdf_type():
    s, _ = translate_belief(belief(relation="concept:generalizations", value="concept:city", vl="", vb="", vc=""), NS)
    assert s == Triple(IRI(R + "city/paris"), RDF_TYPE, IRI(O + "city"))


def test_datatype_range_gives_typed_literal():
    index = build_index([OntologyAssertion("concept:cityhaspopulation", "range", "xsd:integer")])
    notes: list = []
    s, aux = translate_belief(belief(relation="concept:cityhaspopulation", value="2140526"), NS, index, notes)
    assert s.object == Literal("2140526", "http://www.w3.org/2001/XMLSchema#integer")
    # labels and categories of a literal value have nothing to attach to
    assert all(t.subject == IRI(R + "city/paris") for t in aux)
    assert notes


def test_non_concept_value_is_a_plain_literal():
    s, _ = translate_belief(belief(value="some text", vl="", vb="", vc=""), NS)
    assert s.object == Literal("some text")
