from __future__ import annotations

import gzip
import warnings
from decimal import Decimal

import pytest

from nellrdf.errors import (
    GrammarError,
    IterationProbabilityArityMismatch,
    MalformedField,
    NonIntegerIteration,
    ProbabilityOutOfRange,
    PromotionThresholdWarning,
    UnknownComponent,
    UnknownPredicate,
    WrongFieldCount,
)
from nellrdf.grammar import ComponentId
from nellrdf.ingest import (
    FIXTURE_DIALECT,
    ONTOLOGY_PREDICATES,
    BeliefKind,
    is_header,
    iter_lines,
    parse_belief_line,
    parse_ontology_line,
    read_ontology,
)

CPL = '[CPL,iteration=1070,prob=0.9,time=2017-01-02T03:04:05Z,token=(concept:city:paris,concept:country:france),source="arg1 is in arg2|12"]'
TWO = (
    '[CPL,time=2017-01-02T03:04:05Z,token=(a,b),source="x|1",'
    'SEAL,time=2017-01-03T00:00:00+01:00,token=(a,b),source="http://example.org/list"]'
)


def row(**over) -> str:
    fields = {
        "entity": "concept:city:paris",
        "relation": "concept:citylocatedincountry",
        "value": "concept:country:france",
        "iterations": "1075",
        "probability": "0.9375",
        "summary": "CPL",
        "elabels": 'Paris,"Paris, France"',
        "vlabels": "France",
        "ebest": "Paris",
        "vbest": "France",
        "ecats": "concept:city concept:location",
        "vcats": "concept:country",
        "source": CPL,
    }
    fields.update(over)
    return "\t".join(fields.values())


def test_ontology_predicates_are_the_sixteen_nell_ones():
    assert len(ONTOLOGY_PREDICATES) == 16
    assert {"memberofsets", "mutexpredicates", "nrofvalues", "generalizations"} <= ONTOLOGY_PREDICATES


def test_parse_ontology_line():
    a = parse_ontology_line("concept:city\tMemberOfSets\trtwcategory")
    assert (a.subject, a.predicate, a.object) == ("concept:city", "memberofsets", "rtwcategory")


def test_ontology_line_errors():
    with pytest.raises(WrongFieldCount):
        parse_ontology_line("concept:city\tmemberofsets")
    with pytest.raises(UnknownPredicate) as info:
        parse_ontology_line("concept:city\tcolour\tred")
    assert info.value.token == "colour"


def test_read_ontology_yields_row_errors_inline(tmp_path):
    p = tmp_path / "onto.tsv"
    p.write_text("concept:city\tmemberofsets\trtwcategory\n\nbad row\nconcept:x\tnope\ty\n", encoding="utf-8")
    items = list(read_ontology(p))
    assert [n for n, _ in items] == [1, 3, 4]
    assert isinstance(items[1][1], WrongFieldCount) and isinstance(items[2][1], UnknownPredicate)


def test_promoted_row():
    b = parse_belief_line(row(), BeliefKind.PROMOTED)
    assert b.entity_labels == ["Paris", "Paris, France"]
    assert b.entity_categories == ["concept:city", "concept:location"]
    assert b.promotion_iteration == 1075
    assert b.promotion_probability == Decimal("0.9375")
    (e,) = b.executions
    assert e.component is ComponentId.CPL and e.iteration == 1070 and e.probability == Decimal("0.9")


def test_empty_optional_fields():
    b = parse_belief_line(row(elabels="", vlabels="", ebest="", vbest="", ecats="", vcats=""), BeliefKind.PROMOTED)
    assert b.entity_labels == [] and b.entity_best_label is None and b.value_categories == []


def test_promoted_below_threshold_warns_once():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        b = parse_belief_line(row(probability="0.85"), BeliefKind.PROMOTED)
    assert [w.category for w in caught] == [PromotionThresholdWarning]
    assert b.below_threshold


@pytest.mark.parametrize("p", ["0.9", "0.90", "1", "1.0"])
def test_promoted_at_or_above_threshold_is_silent(p):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_belief_line(row(probability=p), BeliefKind.PROMOTED)


def test_candidates_do_not_warn():
    line = row(iterations="[1,2]", probability="[0.1,0.2]", source=TWO)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        b = parse_belief_line(line, BeliefKind.CANDIDATE)
    assert [e.iteration for e in b.executions] == [1, 2]
    assert [e.probability for e in b.executions] == [Decimal("0.1"), Decimal("0.2")]
    assert b.executions[1].time.hour == 23


def test_candidate_lists_accept_bare_form():
    b = parse_belief_line(row(iterations="1, 2", probability="0.1,0.2", source=TWO), BeliefKind.CANDIDATE)
    assert len(b.executions) == 2


@pytest.mark.parametrize(
    "over, kind, error",
    [
        ({"iterations": "ten"}, BeliefKind.PROMOTED, NonIntegerIteration),
        ({"iterations": "-3"}, BeliefKind.PROMOTED, NonIntegerIteration),
        ({"probability": "1.5"}, BeliefKind.PROMOTED, ProbabilityOutOfRange),
        ({"probability": "high"}, BeliefKind.PROMOTED, ProbabilityOutOfRange),
        ({"elabels": 'a"b,"c'}, BeliefKind.PROMOTED, MalformedField),
        ({"source": "[CPL,"}, BeliefKind.PROMOTED, GrammarError),
        ({"iterations": "[1]", "probability": "[0.1,0.2]", "source": TWO}, BeliefKind.CANDIDATE, IterationProbabilityArityMismatch),
        ({"iterations": "[1,2,3]", "probability": "[0.1,0.2,0.3]", "source": TWO}, BeliefKind.CANDIDATE, IterationProbabilityArityMismatch),
        ({"iterations": "[1,x]", "probability": "[0.1,0.2]", "source": TWO}, BeliefKind.CANDIDATE, NonIntegerIteration),
    ],
)
def test_row_errors(over, kind, error):
    with pytest.raises(error):
        parse_belief_line(row(**over), kind)


def test_wrong_field_count():
    with pytest.raises(WrongFieldCount) as info:
        parse_belief_line(row() + "\textra", BeliefKind.PROMOTED)
    assert info.value.count == 14


def test_arity_mismatch_reports_all_three_counts():
    with pytest.raises(IterationProbabilityArityMismatch) as info:
        parse_belief_line(row(iterations="[1]", probability="[0.1,0.2]", source=TWO), BeliefKind.CANDIDATE)
    assert (info.value.iterations, info.value.probabilities, info.value.records) == (1, 2, 2)


def test_unknown_component_is_skipped_with_a_diagnostic():
    src = '[Mystery,time=2017-01-02T03:04:05Z,token=(a,b),source="",SEAL,time=2017-01-02T03:04:05Z,token=(a,b),source="http://x.org"]'
    b = parse_belief_line(row(source=src), BeliefKind.PROMOTED)
    assert [e.component for e in b.executions] == [ComponentId.SEAL]
    assert len(b.diagnostics) == 1 and isinstance(b.diagnostics[0], UnknownComponent)


def test_header_detection():
    assert is_header("Entity\tRelation\tValue")
    assert not is_header(row())


def test_labels_round_trip_through_dialect():
    labels = ["plain", "with, comma", 'with "quotes"', "ü"]
    assert FIXTURE_DIALECT.split_labels(FIXTURE_DIALECT.join_labels(labels)) == labels


def test_iter_lines_reads_gzip_and_crlf(tmp_path):
    plain = tmp_path / "a.tsv"
    plain.write_bytes("one\r\ntwo\nthree".encode())
    packed = tmp_path / "a.tsv.gz"
    packed.write_bytes(gzip.compress("one\r\ntwo\nthree".encode()))
    expected = [(1, "one"), (2, "two"), (3, "three")]
    assert list(iter_lines(plain)) == expected
    assert list(iter_lines(packed)) == expected
