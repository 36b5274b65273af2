from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nellrdf.errors import MalformedEncoding
from nellrdf.ingest import BeliefKind
from nellrdf.rdf import IRI, Literal, Quad, Triple, mk_iri, parse_nquads, serialize_quads
from nellrdf.reify import ModelId, belief_hash, dereify, dereify_detailed, mint_belief_id, reify, singleton_property
from nellrdf.vocab import CONTEXTUAL_EXTENT, CONTEXTUAL_PART_OF, RDF, RDF_TYPE, SINGLETON_PROPERTY_OF, Namespaces

NS = Namespaces("http://nell2rdf.example/")
PARIS = IRI("http://nell2rdf.example/resource/city/paris")
LOCATED = IRI("http://nell2rdf.example/ontology/citylocatedincountry")
FRANCE = IRI("http://nell2rdf.example/resource/country/france")
S = Triple(PARIS, LOCATED, FRANCE)
# printf '%s' '<...paris> <...citylocatedincountry> <...france> .' | sha256sum | cut -c1-32
H = "21f2765e447b1e3a7812ca3cdaa74fb7"

ENCODING_SIZE = {ModelId.RdfReification: 4, ModelId.NAry: 2, ModelId.NamedGraphs: 1, ModelId.SingletonProperty: 2}


def test_belief_hash_matches_independent_digest():
    assert belief_hash(S) == H
    assert mint_belief_id(S, NS) == IRI("http://nell2rdf.example/belief/" + H)


def test_rdf_reification_shape():
    r = reify(S, ModelId.RdfReification, BeliefKind.CANDIDATE, NS)
    b = IRI("http://nell2rdf.example/belief/" + H)
    assert r.attachment == b
    assert r.encoding == (
        Triple(b, RDF_TYPE, RDF.Statement),
        Triple(b, RDF.subject, PARIS),
        Triple(b, RDF.predicate, LOCATED),
        Triple(b, RDF.object, FRANCE),
    )
    assert r.asserted is None


def test_promoted_beliefs_are_asserted_where_the_model_does_not_already():
    for m in (ModelId.RdfReification, ModelId.NAry):
        assert reify(S, m, BeliefKind.PROMOTED, NS).asserted == S
        assert reify(S, m, BeliefKind.CANDIDATE, NS, assert_candidates=True).asserted == S
    for m in (ModelId.NamedGraphs, ModelId.SingletonProperty, ModelId.NdFluents):
        assert reify(S, m, BeliefKind.PROMOTED, NS).asserted is None


def test_nary_shape():
    r = reify(S, ModelId.NAry, BeliefKind.CANDIDATE, NS)
    assert r.encoding == (
        Triple(PARIS, IRI(LOCATED.value + "/statement"), r.attachment),
        Triple(r.attachment, IRI(LOCATED.value + "/value"), FRANCE),
    )


def test_named_graph_shape():
    r = reify(S, ModelId.NamedGraphs, BeliefKind.CANDIDATE, NS)
    assert r.encoding == (Quad(S, IRI("http://nell2rdf.example/graph/" + H)),)


def test_singleton_shape():
    r = reify(S, ModelId.SingletonProperty, BeliefKind.CANDIDATE, NS)
    p1 = IRI(LOCATED.value + "#" + H)
    assert r.attachment == p1
    assert r.encoding == (Triple(PARIS, p1, FRANCE), Triple(p1, SINGLETON_PROPERTY_OF, LOCATED))
    assert singleton_property(IRI("http://x.org/o#p"), H) == IRI("http://x.org/o#p-" + H)


def test_ndfluents_shape():
    r = reify(S, ModelId.NdFluents, BeliefKind.CANDIDATE, NS)
    c = IRI("http://nell2rdf.example/context/" + H)
    sc, oc = IRI(c.value + "/subject"), IRI(c.value + "/object")
    assert r.encoding == (
        Triple(sc, LOCATED, oc),
        Triple(sc, CONTEXTUAL_PART_OF, PARIS),
        Triple(sc, CONTEXTUAL_EXTENT, c),
        Triple(oc, CONTEXTUAL_PART_OF, FRANCE),
        Triple(oc, CONTEXTUAL_EXTENT, c),
    )
    lit = Triple(PARIS, LOCATED, Literal("x"))
    assert len(reify(lit, ModelId.NdFluents, BeliefKind.CANDIDATE, NS).encoding) == 3


def test_attachments_share_the_hash_across_models():
    suffixes = {reify(S, m, BeliefKind.CANDIDATE, NS).attachment.value[-32:] for m in ModelId}
    assert suffixes == {H}


# -- round trip -------------------------------------------------------------------------

segment = st.text(alphabet=st.characters(blacklist_categories=("Cs",)), min_size=1, max_size=10)
iris = segment.map(lambda s: mk_iri("http://example.org/" + s))
predicates = st.one_of(iris, segment.map(lambda s: mk_iri("http://example.org/o#" + s)))
literals = st.one_of(
    st.text(max_size=10).map(Literal),
    st.builds(lambda s: Literal(s, lang="en"), st.text(max_size=10)),
    st.integers().map(lambda i: Literal(str(i), "http://www.w3.org/2001/XMLSchema#integer")),
)
statements = st.builds(Triple, iris, predicates, st.one_of(iris, literals))


@given(statements, st.sampled_from(list(ModelId)), st.sampled_from(list(BeliefKind)))
def test_dereify_inverts_reify(s, model, kind):
    r = reify(s, model, kind, NS)
    assert dereify(r.statement_triples, model) == [(s, r.attachment)]


@given(statements, st.sampled_from(list(ModelId)))
def test_encoding_sizes(s, model):
    n = len(reify(s, model, BeliefKind.CANDIDATE, NS).encoding)
    if model is ModelId.NdFluents:
        assert n == (3 if isinstance(s.object, Literal) else 5)
    else:
        assert n == ENCODING_SIZE[model]


@settings(max_examples=50)
@given(st.lists(statements, min_size=1, max_size=8, unique=True), st.sampled_from(list(ModelId)))
def test_round_trip_through_serialization_with_noise(stmts, model):
    noise = [Triple(IRI("http://example.org/n"), IRI("http://example.org/label"), Literal("noise"))]
    quads = []
    for s in stmts:
        quads += reify(s, model, BeliefKind.PROMOTED, NS).quads()
        quads += [Quad(t) for t in noise]
    parsed = parse_nquads(serialize_quads(quads))
    found = dereify_detailed(parsed, model)
    assert sorted(map(repr, (s for s, _ in found.statements))) == sorted(map(repr, stmts))
    # noise and asserted copies are never mistaken for encoding triples
    assert all(parsed[i].triple not in noise for i in found.encoding)


def _without(items, i):
    return items[:i] + items[i + 1 :]


@pytest.mark.parametrize("model", [ModelId.RdfReification, ModelId.NAry, ModelId.SingletonProperty, ModelId.NdFluents])
def test_truncated_encodings_are_malformed(model):
    enc = list(reify(S, model, BeliefKind.CANDIDATE, NS).encoding)
    for i in range(len(enc)):
        damaged = _without(enc, i)
        try:
            got = dereify(damaged, model)
        except MalformedEncoding:
            continue
        # what is left may be unrecognisable, but it never yields a statement
        assert got == []


def test_conflicting_reification_is_malformed():
    enc = list(reify(S, ModelId.RdfReification, BeliefKind.CANDIDATE, NS).encoding)
    enc.append(Triple(enc[0].subject, RDF.object, PARIS))
    with pytest.raises(MalformedEncoding):
        dereify(enc, ModelId.RdfReification)
