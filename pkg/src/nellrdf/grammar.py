"""Parser for the Candidate Source field (field 13) of a NELL belief.

Field 13 lists every component activity that contributed to a belief. The
fixture dialect read here is documented in ``docs/field13-grammar.ebnf``:

    [CPL,iteration=1070,prob=0.9,time=2017-01-02T03:04:05Z,token=(paris,france),source="..." , ...]

Parsing happens in two stages. :func:`scan_records` splits the field into
:class:`RawRecord` values without interpreting component names; then each
record's ``source`` string is decoded by the sub-grammar registered for its
component in ``SOURCE_PARSERS``. Replacing that table (and the scanner) is
all it takes to support a different dump dialect.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta, timezone
from decimal import Decimal
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .errors import GrammarError, TokenShapeError, UnknownComponent
from .rdf.terms import is_absolute_iri


class ComponentId(enum.Enum):
    AliasMatcher = "AliasMatcher"
    CMC = "CMC"
    CPL = "CPL"
    KbManipulation = "KbManipulation"
    LatLong = "LatLong"
    LE = "LE"
    MBL = "MBL"
    OE = "OE"
    OntologyModifier = "OntologyModifier"
    PRA = "PRA"
    RL = "RL"
    SEAL = "SEAL"
    Semparse = "Semparse"
    SpreadsheetEdits = "SpreadsheetEdits"


# historical or alternative component names -> canonical component
COMPONENT_ALIASES: Dict[str, ComponentId] = {
    "CPL1": ComponentId.CPL,
    "CPL2": ComponentId.CPL,
    "CSEAL": ComponentId.SEAL,
    "CML": ComponentId.CMC,
    "ErrorBasedIntegrator": ComponentId.MBL,
    "KnowledgeIntegrator": ComponentId.MBL,
    "Knowledge Integrator": ComponentId.MBL,
    "EntityResolverCleanup": ComponentId.MBL,
}


_BY_NAME = {c.value: c for c in ComponentId}


def resolve_component(name: str) -> Tuple[ComponentId, Optional[str]]:
    """Map a record name to ``(component, alias)``; alias is None for canonical names."""
    component = _BY_NAME.get(name)
    if component is not None:
        return component, None
    if name in COMPONENT_ALIASES:
        return COMPONENT_ALIASES[name], name
    raise UnknownComponent(name)


# -- tokens ------------------------------------------------------------------------


@dataclass(frozen=True)
class RelationToken:
    entity: str
    relation_value: str


@dataclass(frozen=True)
class GeneralizationToken:
    entity: str
    generalization_value: str


@dataclass(frozen=True)
class GeoToken:
    entity: str
    latitude: Decimal
    longitude: Decimal

    def __post_init__(self):
        _check_coordinates(self.latitude, self.longitude)


Token = Union[RelationToken, GeneralizationToken, GeoToken]


def _check_coordinates(lat: Decimal, lon: Decimal) -> None:
    if not (-90 <= lat <= 90 and -180 <= lon <= 180):
        raise ValueError(f"coordinates out of range: ({lat}, {lon})")


# -- payloads ----------------------------------------------------------------------


@dataclass(frozen=True)
class MorphPattern:
    name: str
    value: str
    score: Decimal


@dataclass(frozen=True)
class PatternOcc:
    pattern: str
    occurrences: int


@dataclass(frozen=True)
class GeoLocation:
    name: str
    latitude: Decimal
    longitude: Decimal
    lang: str = "en"


@dataclass(frozen=True)
class TextUrl:
    text: str
    url: str
    lang: str = "en"


class Direction(enum.Enum):
    Forward = "forward"
    Backward = "backward"


@dataclass(frozen=True)
class RelationPath:
    direction: Direction
    score: Decimal
    relations: Tuple[str, ...]


@dataclass(frozen=True)
class HornRule:
    variables: Tuple[Tuple[str, str], ...]
    predicates: Tuple[Tuple[str, str, str], ...]

    @property
    def free_variables(self) -> List[str]:
        """Variables used by a predicate but never bound."""
        bound = {v for v, _ in self.variables}
        seen = []
        for _, first, second in self.predicates:
            for v in (first, second):
                if v not in bound and v not in seen:
                    seen.append(v)
        return seen


@dataclass(frozen=True)
class RuleScores:
    rule: HornRule
    accuracy: Decimal
    nb_correct: int
    nb_incorrect: int
    nb_unknown: int


@dataclass(frozen=True)
class AliasMatcherPayload:
    freebase_date: date


@dataclass(frozen=True)
class CMCPayload:
    patterns: Tuple[MorphPattern, ...]


@dataclass(frozen=True)
class CPLPayload:
    patterns: Tuple[PatternOcc, ...]


@dataclass(frozen=True)
class KbManipulationPayload:
    old_bug: str


@dataclass(frozen=True)
class LatLongPayload:
    locations: Tuple[GeoLocation, ...]


@dataclass(frozen=True)
class LEPayload:
    pass


@dataclass(frozen=True)
class MBLPayload:
    promoted_entity: str
    promoted_entity_category: str
    promoted_relation: Optional[str] = None
    promoted_value: Optional[str] = None
    promoted_value_category: Optional[str] = None


@dataclass(frozen=True)
class OEPayload:
    pairs: Tuple[TextUrl, ...]


class ModificationKind(enum.Enum):
    Category = "category"
    Relation = "relation"


@dataclass(frozen=True)
class OntologyModifierPayload:
    modification: str
    modification_kind: ModificationKind


@dataclass(frozen=True)
class PRAPayload:
    paths: Tuple[RelationPath, ...]


@dataclass(frozen=True)
class RLPayload:
    rule_scores: RuleScores


@dataclass(frozen=True)
class SEALPayload:
    url: str


@dataclass(frozen=True)
class SemparsePayload:
    sentence: str


@dataclass(frozen=True)
class SpreadsheetEditsPayload:
    user: str
    entity: str
    relation: str
    value: str
    action: str
    file: str


ComponentPayload = Union[
    AliasMatcherPayload,
    CMCPayload,
    CPLPayload,
    KbManipulationPayload,
    LatLongPayload,
    LEPayload,
    MBLPayload,
    OEPayload,
    OntologyModifierPayload,
    PRAPayload,
    RLPayload,
    SEALPayload,
    SemparsePayload,
    SpreadsheetEditsPayload,
]


@dataclass(frozen=True)
class ComponentExecution:
    component: ComponentId
    iteration: Optional[int]
    probability: Optional[Decimal]
    time: datetime
    token: Token
    payload: ComponentPayload
    source: str = ""
    alias: Optional[str] = None


# -- stage 1: record scanner ---------------------------------------------------------


@dataclass
class RawRecord:
    name: str
    offset: int
    iteration: Optional[str]
    probability: Optional[str]
    time: str
    token: List[str]
    source: str
    source_offset: int = 0


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_ ]*")
_KEY = re.compile(r"(iteration|prob|time|token|source)=")
_UINT = re.compile(r"[0-9]+", re.ASCII)
_DEC = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)", re.ASCII)
_DATETIME = re.compile(
    r"([0-9]{4})-([0-9]{2})-([0-9]{2})T([0-9]{2}):([0-9]{2}):([0-9]{2})(\.[0-9]{1,6})?(Z|[+-][0-9]{2}:[0-9]{2})?",
    re.ASCII,
)
_DATE = re.compile(r"([0-9]{4})-([0-9]{2})-([0-9]{2})\Z", re.ASCII)
_WS = re.compile(r"[ \t]*")
_BARE_ITEM = re.compile(r'[^,()"]+')
_QUOTED_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: str):
        raise GrammarError(self.pos, expected, self.text)

    def ws(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self) -> str:
        return self.text[self.pos : self.pos + 1]

    def expect(self, literal: str):
        self.ws()
        if not self.text.startswith(literal, self.pos):
            self.error(repr(literal))
        self.pos += len(literal)

    def match(self, pattern: re.Pattern, expected: str) -> str:
        m = pattern.match(self.text, self.pos)
        if m is None:
            self.error(expected)
        self.pos = m.end()
        return m.group(0)

    def quoted(self) -> str:
        self.ws()
        if self.peek() != '"':
            self.error("quoted string")
        self.pos += 1
        out = []
        text = self.text
        while True:
            end = len(text)
            i = self.pos
            while i < end and text[i] not in '"\\':
                i += 1
            out.append(text[self.pos : i])
            if i >= end:
                self.pos = i
                self.error("closing '\"'")
            if text[i] == '"':
                self.pos = i + 1
                return "".join(out)
            esc = text[i + 1 : i + 2]
            if esc not in _QUOTED_ESCAPES:
                self.pos = i
                self.error("escape sequence")
            out.append(_QUOTED_ESCAPES[esc])
            self.pos = i + 2

    def token_items(self) -> List[str]:
        self.expect("(")
        items = []
        while True:
            self.ws()
            if self.peek() == '"':
                items.append(self.quoted())
            else:
                items.append(self.match(_BARE_ITEM, "token item").strip())
            self.ws()
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect(")")
            return items

    def record(self) -> RawRecord:
        self.ws()
        start = self.pos
        name = self.match(_NAME, "component name").rstrip()
        values: Dict[str, object] = {}
        source_offset = 0
        while True:
            self.ws()
            if self.peek() != ",":
                break
            save = self.pos
            self.pos += 1
            self.ws()
            m = _KEY.match(self.text, self.pos)
            if m is None:
                # the comma separates this record from the next one
                self.pos = save
                break
            key = m.group(1)
            if key in values:
                self.error(f"single '{key}='")
            self.pos = m.end()
            if key == "iteration":
                values[key] = self.match(_UINT, "non-negative integer")
            elif key == "prob":
                values[key] = self.match(_DEC, "decimal")
            elif key == "time":
                values[key] = self.match(_DATETIME, "dateTime")
            elif key == "token":
                values[key] = self.token_items()
            else:
                self.ws()
                source_offset = self.pos
                values[key] = self.quoted()
        for key in ("time", "token", "source"):
            if key not in values:
                self.error(f"'{key}=' in record {name!r}")
        return RawRecord(
            name=name,
            offset=start,
            iteration=values.get("iteration"),
            probability=values.get("prob"),
            time=values["time"],
            token=values["token"],
            source=values["source"],
            source_offset=source_offset,
        )


# One record in the usual layout (no blanks, keys in order, bare token items).
# Anything else falls through to the scanner, which also locates errors.
_FAST_RECORD = re.compile(
    r"([A-Za-z][A-Za-z0-9_ ]*?),(?:iteration=([0-9]+),)?(?:prob=(" + _DEC.pattern + r"),)?"
    r"time=(" + _DATETIME.pattern + r"),token=\(([^,()\"]+(?:,[^,()\"]+)*)\),"
    r'source="((?:[^"\\]|\\[nrt"\\])*)"',
    re.ASCII,
)
_FAST_ESCAPE = re.compile(r"\\(.)")


def _scan_fast(field13: str) -> Optional[List[RawRecord]]:
    if not (field13.startswith("[") and field13.endswith("]")):
        return None
    records = []
    pos, end = 1, len(field13) - 1
    while pos < end:
        m = _FAST_RECORD.match(field13, pos, end)
        if m is None:
            return None
        name, iteration, prob, time, token, source = m.group(1, 2, 3, 4, 13, 14)
        if name != name.rstrip() or any(item != item.strip() or not item for item in token.split(",")):
            return None
        if "\\" in source:
            source = _FAST_ESCAPE.sub(lambda e: _QUOTED_ESCAPES[e.group(1)], source)
        records.append(RawRecord(name, pos, iteration, prob, time, token.split(","), source, m.start(14) - 1))
        pos = m.end()
        if pos < end:
            if field13[pos] != ",":
                return None
            pos += 1
            if pos == end:
                return None
    return records


def scan_records(field13: str) -> List[RawRecord]:
    """Split field 13 into raw records without interpreting them."""
    fast = _scan_fast(field13)
    if fast:
        return fast
    return _scan_slow(field13)


def _scan_slow(field13: str) -> List[RawRecord]:
    if not field13.strip():
        return []
    sc = _Scanner(field13)
    sc.expect("[")
    records: List[RawRecord] = []
    sc.ws()
    if sc.peek() == "]":
        sc.pos += 1
    else:
        while True:
            records.append(sc.record())
            sc.ws()
            if sc.peek() == ",":
                sc.pos += 1
                continue
            sc.expect("]")
            break
    sc.ws()
    if sc.pos != len(field13):
        sc.error("end of field")
    return records


def count_records(field13: str) -> int:
    return len(scan_records(field13))


# -- stage 2: typed values -----------------------------------------------------------


def parse_datetime(text: str) -> datetime:
    """Parse an xsd:dateTime; a missing timezone means UTC."""
    m = _DATETIME.fullmatch(text)
    if m is None:
        raise ValueError(f"not a dateTime: {text!r}")
    frac, tz = m.group(7), m.group(8)
    if tz == "Z" and (frac is None or len(frac) in (4, 7)):
        # the common shape; fromisoformat parses it in C
        return datetime.fromisoformat(text[:-1] + "+00:00")
    y, mo, d, h, mi, s = (int(g) for g in m.groups()[:6])
    micro = int((frac[1:] + "000000")[:6]) if frac else 0
    if tz in (None, "Z"):
        tzinfo = timezone.utc
    else:
        sign = 1 if tz[0] == "+" else -1
        hours, minutes = int(tz[1:3]), int(tz[4:6])
        if hours > 14 or minutes > 59:
            raise ValueError(f"bad timezone offset {tz!r}")
        tzinfo = timezone(sign * timedelta(hours=hours, minutes=minutes))
    return datetime(y, mo, d, h, mi, s, micro, tzinfo=tzinfo).astimezone(timezone.utc)


def parse_token(items: Union[str, Sequence[str]], component: ComponentId, relation: Optional[str] = None) -> Token:
    """Interpret a record's token tuple.

    LatLong tokens are ``(entity, latitude, longitude)``; all others are pairs,
    read as a generalization when the belief's relation is ``generalizations``
    and as a relation token otherwise. A string argument is parsed as
    ``(a,b[,c])`` first.
    """
    if isinstance(items, str):
        sc = _Scanner(items)
        try:
            items = sc.token_items()
        except GrammarError as exc:
            raise TokenShapeError(exc.offset, exc.expected, items) from None
        if sc.pos != len(sc.text):
            raise TokenShapeError(sc.pos, "end of token", sc.text)
    if component is ComponentId.LatLong:
        if len(items) != 3:
            raise TokenShapeError(0, f"3 items in a LatLong token, got {len(items)}")
        entity, lat, lon = items
        lat_d, lon_d = _decimal(lat), _decimal(lon)
        if lat_d is None or lon_d is None:
            raise TokenShapeError(0, "decimal coordinates")
        try:
            return GeoToken(entity, lat_d, lon_d)
        except ValueError:
            raise TokenShapeError(0, "coordinates within [-90, 90] x [-180, 180]") from None
    if len(items) != 2:
        raise TokenShapeError(0, f"2 items in a {component.value} token, got {len(items)}")
    if relation is not None and relation.lower().rsplit(":", 1)[-1] == "generalizations":
        return GeneralizationToken(items[0], items[1])
    return RelationToken(items[0], items[1])


def _decimal(text: str) -> Optional[Decimal]:
    text = text.strip()
    if _DEC.fullmatch(text) is None:
        return None
    return Decimal(text)


# -- source sub-grammar --------------------------------------------------------------

_SUB_BARE = re.compile(r"[^;|']*")


def split_source(source: str) -> List[List[str]]:
    """Split a source string into items (``;``) of fields (``|``).

    A field may be single-quoted to contain ``;``, ``|`` or ``'``; a quote
    inside is doubled. Bare fields are stripped of surrounding blanks.
    """
    if not source.strip():
        return []
    if "'" not in source:
        return [[f.strip() for f in item.split("|")] for item in source.split(";")]
    return _split_quoted(source)


def _split_quoted(source: str) -> List[List[str]]:
    items: List[List[str]] = []
    current: List[str] = []
    pos, n = 0, len(source)
    while True:
        # one field
        m = _WS.match(source, pos)
        pos = m.end()
        if pos < n and source[pos] == "'":
            pos += 1
            buf = []
            while True:
                q = source.find("'", pos)
                if q < 0:
                    raise GrammarError(pos, "closing \"'\"", source)
                buf.append(source[pos:q])
                if source.startswith("''", q):
                    buf.append("'")
                    pos = q + 2
                    continue
                pos = q + 1
                break
            current.append("".join(buf))
            pos = _WS.match(source, pos).end()
        else:
            m = _SUB_BARE.match(source, pos)
            current.append(m.group(0).strip())
            pos = m.end()
        if pos >= n:
            items.append(current)
            return items
        ch = source[pos]
        pos += 1
        if ch == "|":
            continue
        if ch == ";":
            items.append(current)
            current = []
            continue
        raise GrammarError(pos - 1, "';' or '|'", source)


def _need(cond: bool, expected: str):
    if not cond:
        raise GrammarError(0, expected)


def _fields(items, arity: int, what: str):
    for item in items:
        _need(len(item) == arity, f"{arity} fields per {what} item")
    return items


def _dec(text: str, what: str) -> Decimal:
    d = _decimal(text)
    _need(d is not None, f"decimal {what}")
    return d


def _uint(text: str, what: str) -> int:
    _need(_UINT.fullmatch(text.strip()) is not None, f"non-negative integer {what}")
    return int(text)


def _single(items, what: str) -> str:
    _need(len(items) == 1 and len(items[0]) == 1, f"exactly one {what}")
    return items[0][0]


def _alias_matcher(items) -> AliasMatcherPayload:
    text = _single(items, "date")
    m = _DATE.match(text)
    _need(m is not None, "YYYY-MM-DD date")
    try:
        return AliasMatcherPayload(date(*(int(g) for g in m.groups())))
    except ValueError:
        raise GrammarError(0, "valid calendar date") from None


def _cmc(items) -> CMCPayload:
    return CMCPayload(tuple(MorphPattern(n, v, _dec(s, "score")) for n, v, s in _fields(items, 3, "CMC")))


def _cpl(items) -> CPLPayload:
    out = []
    for pattern, count in _fields(items, 2, "CPL"):
        n = _uint(count, "occurrence count")
        _need(n >= 1, "occurrence count >= 1")
        out.append(PatternOcc(pattern, n))
    return CPLPayload(tuple(out))


def _latlong(items) -> LatLongPayload:
    out = []
    for name, lat, lon in _fields(items, 3, "LatLong"):
        la, lo = _dec(lat, "latitude"), _dec(lon, "longitude")
        _need(-90 <= la <= 90 and -180 <= lo <= 180, "coordinates in range")
        out.append(GeoLocation(name, la, lo))
    return LatLongPayload(tuple(out))


def _mbl(items) -> MBLPayload:
    _need(len(items) == 1 and 2 <= len(items[0]) <= 5, "one MBL item of 2 to 5 fields")
    f = list(items[0]) + [""] * (5 - len(items[0]))
    _need(bool(f[0]) and bool(f[1]), "promoted entity and category")
    return MBLPayload(f[0], f[1], f[2] or None, f[3] or None, f[4] or None)


def _oe(items) -> OEPayload:
    out = []
    for text, url in _fields(items, 2, "OE"):
        _need(is_absolute_iri(url), "absolute URL")
        out.append(TextUrl(text, url))
    return OEPayload(tuple(out))


def _ontology_modifier(items) -> OntologyModifierPayload:
    _need(len(items) == 1 and len(items[0]) == 2, "one 'kind|modification' item")
    kind, modification = items[0]
    try:
        mk = ModificationKind(kind.lower())
    except ValueError:
        raise GrammarError(0, "'category' or 'relation'") from None
    return OntologyModifierPayload(modification, mk)


def _pra(items) -> PRAPayload:
    out = []
    for item in items:
        _need(len(item) >= 3, "direction|score|relation... PRA item")
        try:
            direction = Direction(item[0].lower())
        except ValueError:
            raise GrammarError(0, "'forward' or 'backward'") from None
        relations = tuple(item[2:])
        _need(all(relations), "non-empty relation names")
        out.append(RelationPath(direction, _dec(item[1], "path score"), relations))
    return PRAPayload(tuple(out))


def _rl(items) -> RLPayload:
    scores = None
    variables: List[Tuple[str, str]] = []
    predicates: List[Tuple[str, str, str]] = []
    for item in items:
        tag = item[0]
        if tag == "scores":
            _need(len(item) == 5 and scores is None, "one scores|accuracy|correct|incorrect|unknown item")
            acc = _dec(item[1], "accuracy")
            _need(0 <= acc <= 1, "accuracy in [0, 1]")
            scores = (acc, _uint(item[2], "nbCorrect"), _uint(item[3], "nbIncorrect"), _uint(item[4], "nbUnknown"))
        elif tag == "var":
            _need(len(item) == 3, "var|variable|value item")
            variables.append((item[1], item[2]))
        elif tag == "pred":
            _need(len(item) == 4, "pred|name|first|second item")
            predicates.append((item[1], item[2], item[3]))
        else:
            raise GrammarError(0, "'scores', 'var' or 'pred' item")
    _need(scores is not None, "a scores item")
    rule = HornRule(tuple(variables), tuple(predicates))
    return RLPayload(RuleScores(rule, *scores))


def _seal(items) -> SEALPayload:
    url = _single(items, "URL")
    _need(is_absolute_iri(url), "absolute URL")
    return SEALPayload(url)


def _spreadsheet(items) -> SpreadsheetEditsPayload:
    _need(len(items) == 1 and len(items[0]) == 6, "one user|entity|relation|value|action|file item")
    return SpreadsheetEditsPayload(*items[0])


SOURCE_PARSERS: Dict[ComponentId, Callable[[List[List[str]]], ComponentPayload]] = {
    ComponentId.AliasMatcher: _alias_matcher,
    ComponentId.CMC: _cmc,
    ComponentId.CPL: _cpl,
    ComponentId.KbManipulation: lambda items: KbManipulationPayload(_single(items, "bug description")),
    ComponentId.LatLong: _latlong,
    ComponentId.LE: lambda items: LEPayload(),
    ComponentId.MBL: _mbl,
    ComponentId.OE: _oe,
    ComponentId.OntologyModifier: _ontology_modifier,
    ComponentId.PRA: _pra,
    ComponentId.RL: _rl,
    ComponentId.SEAL: _seal,
    ComponentId.Semparse: lambda items: SemparsePayload(_single(items, "sentence")),
    ComponentId.SpreadsheetEdits: _spreadsheet,
}


def parse_payload(component: ComponentId, source: str, offset: int = 0) -> ComponentPayload:
    try:
        return SOURCE_PARSERS[component](split_source(source))
    except GrammarError as exc:
        raise GrammarError(offset + exc.offset, exc.expected) from None


def parse_candidate_source(
    field13: Union[str, Sequence[RawRecord]],
    iterations: Optional[Sequence[int]] = None,
    probabilities: Optional[Sequence[Decimal]] = None,
    relation: Optional[str] = None,
    diagnostics: Optional[list] = None,
) -> List[ComponentExecution]:
    """Parse field 13 into one :class:`ComponentExecution` per known record.

    When ``iterations``/``probabilities`` are given (candidate rows) they are
    aligned 1:1 with the records and override the per-record values.
    Records naming an unknown component are skipped and reported through
    ``diagnostics`` (an ``UnknownComponent`` per record).
    """
    records = scan_records(field13) if isinstance(field13, str) else list(field13)
    if iterations is not None and len(iterations) != len(records):
        raise GrammarError(0, f"{len(iterations)} records to match field 4")
    if probabilities is not None and len(probabilities) != len(records):
        raise GrammarError(0, f"{len(probabilities)} records to match field 5")
    out: List[ComponentExecution] = []
    for i, rec in enumerate(records):
        try:
            component, alias = resolve_component(rec.name)
        except UnknownComponent as exc:
            if diagnostics is not None:
                diagnostics.append(exc)
            continue
        iteration = iterations[i] if iterations is not None else (int(rec.iteration) if rec.iteration else None)
        if probabilities is not None:
            probability = probabilities[i]
        elif rec.probability is not None:
            probability = Decimal(rec.probability)
        else:
            probability = None
        if probability is not None and not 0 <= probability <= 1:
            raise GrammarError(rec.offset, "probability in [0, 1]")
        try:
            when = parse_datetime(rec.time)
        except (ValueError, OverflowError):
            raise GrammarError(rec.offset, "valid dateTime") from None
        try:
            token = parse_token(rec.token, component, relation)
        except TokenShapeError as exc:
            raise TokenShapeError(rec.offset, exc.expected) from None
        payload = parse_payload(component, rec.source, rec.source_offset)
        out.append(ComponentExecution(component, iteration, probability, when, token, payload, rec.source, alias))
    return out


__all__ = [
    "ComponentExecution",
    "ComponentId",
    "ComponentPayload",
    "Direction",
    "GeneralizationToken",
    "GeoToken",
    "HornRule",
    "ModificationKind",
    "RawRecord",
    "RelationToken",
    "Token",
    "count_records",
    "parse_candidate_source",
    "parse_datetime",
    "parse_payload",
    "parse_token",
    "scan_records",
    "split_source",
]
