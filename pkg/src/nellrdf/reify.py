"""Five statement-reification models and their exact inverse.

Every model yields one *attachment* IRI per statement; all provenance for the
belief hangs off that IRI. Attachments, graph names and contexts all reuse
the same content hash of the statement, so a belief is addressed identically
(up to the namespace segment) whichever model is chosen.
"""

from __future__ import annotations

import enum
import hashlib
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .errors import MalformedEncoding
from .ingest import BeliefKind
from .rdf import IRI, Literal, Quad, Triple, triple_nt
from .vocab import CONTEXTUAL_EXTENT, CONTEXTUAL_PART_OF, RDF, RDF_TYPE, SINGLETON_PROPERTY_OF, Namespaces

NARY_STATEMENT = "/statement"
NARY_VALUE = "/value"


class ModelId(enum.Enum):
    RdfReification = "reification"
    NAry = "nary"
    NamedGraphs = "ngraphs"
    SingletonProperty = "singleton"
    NdFluents = "ndfluents"


def belief_hash(s: Triple) -> str:
    """128-bit SHA-256 prefix (hex) of the statement's N-Triples line."""
    return hashlib.sha256(triple_nt(s).encode("utf-8")).hexdigest()[:32]


def mint_belief_id(s: Triple, base: Union[Namespaces, str]) -> IRI:
    ns = base if isinstance(base, Namespaces) else Namespaces(base)
    return IRI(ns.belief + belief_hash(s))


@dataclass(frozen=True)
class ReifiedStatement:
    base: Triple
    model: ModelId
    encoding: Tuple[Union[Triple, Quad], ...]
    attachment: IRI
    asserted: Optional[Triple] = None
    belief_hash: str = ""

    @property
    def statement_triples(self) -> Tuple[Union[Triple, Quad], ...]:
        """The encoding plus, where the model asserts it, the base triple."""
        if self.asserted is None:
            return self.encoding
        return self.encoding + (self.asserted,)

    def quads(self) -> List[Quad]:
        return [q if isinstance(q, Quad) else Quad(q) for q in self.statement_triples]


def singleton_property(predicate: IRI, h: str) -> IRI:
    sep = "-" if "#" in predicate.value else "#"
    return IRI(predicate.value + sep + h)


def reify(
    s: Triple,
    model: ModelId,
    kind: BeliefKind,
    base: Union[Namespaces, str],
    assert_candidates: bool = False,
) -> ReifiedStatement:
    ns = base if isinstance(base, Namespaces) else Namespaces(base)
    h = belief_hash(s)
    subj, pred, obj = s
    assert_base = kind is BeliefKind.PROMOTED or assert_candidates
    asserted = None
    if model is ModelId.RdfReification:
        b = IRI(ns.belief + h)
        enc = (
            Triple(b, RDF_TYPE, RDF.Statement),
            Triple(b, RDF.subject, subj),
            Triple(b, RDF.predicate, pred),
            Triple(b, RDF.object, obj),
        )
        asserted = s if assert_base else None
    elif model is ModelId.NAry:
        b = IRI(ns.belief + h)
        enc = (
            Triple(subj, IRI(pred.value + NARY_STATEMENT), b),
            Triple(b, IRI(pred.value + NARY_VALUE), obj),
        )
        asserted = s if assert_base else None
    elif model is ModelId.NamedGraphs:
        b = IRI(ns.graph + h)
        enc = (Quad(s, b),)
    elif model is ModelId.SingletonProperty:
        b = singleton_property(pred, h)
        enc = (Triple(subj, b, obj), Triple(b, SINGLETON_PROPERTY_OF, pred))
    elif model is ModelId.NdFluents:
        b = IRI(ns.context + h)
        s_c = IRI(b.value + "/subject")
        if isinstance(obj, Literal):
            enc = (
                Triple(s_c, pred, obj),
                Triple(s_c, CONTEXTUAL_PART_OF, subj),
                Triple(s_c, CONTEXTUAL_EXTENT, b),
            )
        else:
            o_c = IRI(b.value + "/object")
            enc = (
                Triple(s_c, pred, o_c),
                Triple(s_c, CONTEXTUAL_PART_OF, subj),
                Triple(s_c, CONTEXTUAL_EXTENT, b),
                Triple(o_c, CONTEXTUAL_PART_OF, obj),
                Triple(o_c, CONTEXTUAL_EXTENT, b),
            )
    else:  # pragma: no cover
        raise ValueError(model)
    return ReifiedStatement(s, model, enc, b, asserted, h)


# -- inverse ---------------------------------------------------------------------------


@dataclass
class Dereified:
    """Statements recovered from a stream plus the positions of their encoding."""

    statements: List[Tuple[Triple, IRI]] = field(default_factory=list)
    encoding: Set[int] = field(default_factory=set)

    def attachments(self) -> Dict[IRI, Triple]:
        return {a: s for s, a in self.statements}


def _as_quads(items: Iterable[Union[Triple, Quad]]) -> List[Quad]:
    return [q if isinstance(q, Quad) else Quad(q) for q in items]


def _one(values: Dict, key, what: str, term):
    found = values.get(key)
    if not found:
        raise MalformedEncoding(f"{term.value if hasattr(term, 'value') else term}: missing {what}", term)
    if len(found) > 1:
        raise MalformedEncoding(f"{term.value}: {len(found)} distinct {what} values", term)
    return next(iter(found))


def _dereify_reification(quads: Sequence[Quad]) -> Dereified:
    roles = {RDF.subject: "s", RDF.predicate: "p", RDF.object: "o"}
    parts: Dict[IRI, Dict[str, Set]] = {}
    order: List[IRI] = []
    positions: Dict[IRI, List[int]] = defaultdict(list)
    for i, (t, g) in enumerate(quads):
        if g is not None:
            continue
        s, p, o = t
        role = roles.get(p)
        if role is None and p == RDF_TYPE and o == RDF.Statement:
            role = "type"
        if role is None:
            continue
        if s not in parts:
            parts[s] = defaultdict(set)
            order.append(s)
        parts[s][role].add(o)
        positions[s].append(i)
    out = Dereified()
    for b in order:
        d = parts[b]
        if "type" not in d:
            raise MalformedEncoding(f"{b.value}: missing rdf:type rdf:Statement", b)
        stmt = Triple(_one(d, "s", "rdf:subject", b), _one(d, "p", "rdf:predicate", b), _one(d, "o", "rdf:object", b))
        if not isinstance(stmt.predicate, IRI) or isinstance(stmt.subject, Literal):
            raise MalformedEncoding(f"{b.value}: reified statement is not a valid triple", b)
        out.statements.append((stmt, b))
        out.encoding.update(positions[b])
    return out


def _dereify_nary(quads: Sequence[Quad]) -> Dereified:
    links: Dict = defaultdict(set)  # b -> {(subject, predicate)}
    link_pos: Dict = defaultdict(list)
    order = []
    for i, (t, g) in enumerate(quads):
        if g is None and t.predicate.value.endswith(NARY_STATEMENT) and isinstance(t.object, IRI):
            b = t.object
            if b not in links:
                order.append(b)
            links[b].add((t.subject, IRI(t.predicate.value[: -len(NARY_STATEMENT)])))
            link_pos[b].append(i)
    values: Dict = defaultdict(set)
    for i, (t, g) in enumerate(quads):
        if g is None and t.subject in links and t.predicate.value.endswith(NARY_VALUE):
            values[t.subject].add((IRI(t.predicate.value[: -len(NARY_VALUE)]), t.object))
            link_pos[t.subject].append(i)
    out = Dereified()
    for b in order:
        subj, pred = _one(links, b, "n-ary statement link", b)
        vals = values.get(b, set())
        if len(vals) != 1:
            raise MalformedEncoding(f"{b.value}: expected one n-ary value link, found {len(vals)}", b)
        vpred, obj = next(iter(vals))
        if vpred != pred:
            raise MalformedEncoding(f"{b.value}: value link uses {vpred.value}, statement link {pred.value}", b)
        out.statements.append((Triple(subj, pred, obj), b))
        out.encoding.update(link_pos[b])
    return out


def _dereify_named_graphs(quads: Sequence[Quad]) -> Dereified:
    grouped: Dict[IRI, List[Tuple[int, Triple]]] = {}
    for i, (t, g) in enumerate(quads):
        if g is not None:
            grouped.setdefault(g, []).append((i, t))
    out = Dereified()
    for g, members in grouped.items():
        seen = set()
        for i, t in members:
            out.encoding.add(i)
            if t not in seen:
                seen.add(t)
                out.statements.append((t, g))
    return out


def _dereify_singleton(quads: Sequence[Quad]) -> Dereified:
    generic: Dict = defaultdict(set)
    order = []
    pos: Dict = defaultdict(list)
    for i, (t, g) in enumerate(quads):
        if g is None and t.predicate == SINGLETON_PROPERTY_OF:
            if t.subject not in generic:
                order.append(t.subject)
            generic[t.subject].add(t.object)
            pos[t.subject].append(i)
    uses: Dict = defaultdict(set)
    for i, (t, g) in enumerate(quads):
        if g is None and t.predicate in generic:
            uses[t.predicate].add((t.subject, t.object))
            pos[t.predicate].append(i)
    out = Dereified()
    for p1 in order:
        pred = _one(generic, p1, "singletonPropertyOf", p1)
        subj, obj = _one(uses, p1, "statement using the singleton property", p1)
        out.statements.append((Triple(subj, pred, obj), p1))
        out.encoding.update(pos[p1])
    return out


def _dereify_ndfluents(quads: Sequence[Quad]) -> Dereified:
    part_of: Dict = defaultdict(set)
    extent: Dict = defaultdict(set)
    pos: Dict = defaultdict(list)
    for i, (t, g) in enumerate(quads):
        if g is not None:
            continue
        if t.predicate == CONTEXTUAL_PART_OF:
            part_of[t.subject].add(t.object)
            pos[t.subject].append(i)
        elif t.predicate == CONTEXTUAL_EXTENT:
            extent[t.subject].add(t.object)
            pos[t.subject].append(i)
    contexts: Dict = {}
    order = []
    for part in list(part_of) + [p for p in extent if p not in part_of]:
        c = _one(extent, part, "contextualExtent", part)
        _one(part_of, part, "contextualPartOf", part)
        if c not in contexts:
            contexts[c] = set()
            order.append(c)
        contexts[c].add(part)
    stmts: Dict = defaultdict(list)
    for i, (t, g) in enumerate(quads):
        if g is None and t.subject in part_of and t.predicate not in (CONTEXTUAL_PART_OF, CONTEXTUAL_EXTENT):
            c = next(iter(extent[t.subject]))
            stmts[c].append((i, t))
    out = Dereified()
    for c in order:
        found = {t for _, t in stmts.get(c, [])}
        if len(found) != 1:
            raise MalformedEncoding(f"{c.value}: expected one contextualized statement, found {len(found)}", c)
        s_c, pred, o = next(iter(found))
        members = contexts[c]
        if o in members:
            obj = next(iter(part_of[o]))
        else:
            obj = o
        unused = members - {s_c, o}
        if unused:
            raise MalformedEncoding(f"{c.value}: dangling contextual part {next(iter(unused)).value}", c)
        out.statements.append((Triple(next(iter(part_of[s_c])), pred, obj), c))
        out.encoding.update(i for i, _ in stmts[c])
        for m in members:
            out.encoding.update(pos[m])
    return out


_DEREIFIERS = {
    ModelId.RdfReification: _dereify_reification,
    ModelId.NAry: _dereify_nary,
    ModelId.NamedGraphs: _dereify_named_graphs,
    ModelId.SingletonProperty: _dereify_singleton,
    ModelId.NdFluents: _dereify_ndfluents,
}


def dereify_detailed(items: Iterable[Union[Triple, Quad]], model: ModelId) -> Dereified:
    """Recover statements and mark which input positions encode them.

    Input may contain unrelated triples (labels, provenance); only the
    model's encoding shape is consumed.
    """
    return _DEREIFIERS[model](_as_quads(items))


def dereify(items: Iterable[Union[Triple, Quad]], model: ModelId) -> List[Tuple[Triple, IRI]]:
    return dereify_detailed(items, model).statements
