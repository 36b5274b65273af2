"""VoID/DCAT description of the files one conversion run produced."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

from .rdf import IRI, Literal, Triple, integer_literal, non_negative_integer_literal
from .vocab import DCAT, DCTERMS, OWL, RDF_TYPE, RDFS, VOID, XSD, Namespaces

MEDIA_TYPES = {
    "ntriples": IRI("https://www.iana.org/assignments/media-types/application/n-triples"),
    "nquads": IRI("https://www.iana.org/assignments/media-types/application/n-quads"),
    "trig": IRI("https://www.iana.org/assignments/media-types/application/trig"),
}
GZIP_MEDIA_TYPE = IRI("https://www.iana.org/assignments/media-types/application/gzip")


@dataclass(frozen=True)
class Distribution:
    """One output file holding the beliefs of one kind in one model."""

    model: str
    kind: str
    filename: str
    format: str  # key of MEDIA_TYPES
    gzip: bool
    triples: int


def dataset_iri(ns: Namespaces, model: str) -> IRI:
    return ns.dataset.term(model)


def emit_dataset_metadata(
    ns: Namespaces,
    model: str,
    total_triples: int,
    distributions: Iterable[Distribution],
    beliefs: Optional[int] = None,
) -> List[Triple]:
    """Dataset node for one model plus a distribution node per output file."""
    v = ns.vocab
    ds = dataset_iri(ns, model)
    out = [
        Triple(ds, RDF_TYPE, VOID.Dataset),
        Triple(ds, RDF_TYPE, DCAT.Dataset),
        Triple(ds, DCTERMS.term("title"), Literal(f"NELL beliefs ({model} model)")),
        Triple(ds, VOID.triples, integer_literal(total_triples)),
        Triple(ds, v.reificationModel, Literal(model)),
    ]
    if beliefs is not None:
        out.append(Triple(ds, v.beliefCount, non_negative_integer_literal(beliefs)))
    for d in distributions:
        dist = IRI(ds.value + "/" + d.kind)
        out += [
            Triple(ds, DCAT.distribution, dist),
            Triple(dist, RDF_TYPE, DCAT.Distribution),
            Triple(dist, DCTERMS.term("title"), Literal(d.filename)),
            Triple(dist, DCAT.downloadURL, ns.dataset.term(d.filename)),
            Triple(dist, DCAT.mediaType, MEDIA_TYPES[d.format]),
            Triple(dist, v.beliefKind, Literal(d.kind)),
            Triple(dist, v.statementCount, non_negative_integer_literal(d.triples)),
        ]
        if d.gzip:
            out.append(Triple(dist, DCAT.compressFormat, GZIP_MEDIA_TYPE))
    return out


def metadata_declarations(ns: Namespaces) -> List[Triple]:
    """Declare the few converter-specific properties used in dataset metadata."""
    v = ns.vocab
    out = []
    for name, rng in (
        ("reificationModel", XSD.string),
        ("beliefKind", XSD.string),
        ("beliefCount", XSD.nonNegativeInteger),
        ("statementCount", XSD.nonNegativeInteger),
    ):
        out += [Triple(v.term(name), RDF_TYPE, OWL.DatatypeProperty), Triple(v.term(name), RDFS.range, rng)]
    return out
