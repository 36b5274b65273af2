"""Line-oriented readers for the NELL ontology and belief dumps.

Both dumps are tab-separated UTF-8 text, optionally gzip-compressed. The
syntax *inside* a field (how label and category lists are delimited, how
candidate iteration lists are written) is not fixed by NELL's documentation,
so it is isolated in :class:`Dialect`; ``FIXTURE_DIALECT`` is the grammar the
in-repo fixtures use.
"""

from __future__ import annotations

import csv
import enum
import gzip
import io
import re
import warnings
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from typing import IO, Iterator, List, Optional, Tuple

from .errors import (
    IterationProbabilityArityMismatch,
    MalformedField,
    NonIntegerIteration,
    ProbabilityOutOfRange,
    PromotionThresholdWarning,
    UnknownPredicate,
    WrongFieldCount,
)
from .grammar import ComponentExecution, parse_candidate_source, scan_records

ONTOLOGY_PREDICATES = frozenset(
    {
        "antireflexive",
        "antisymmetric",
        "description",
        "domain",
        "domainwithinrange",
        "generalizations",
        "humanformat",
        "instancetype",
        "inverse",
        "memberofsets",
        "mutexpredicates",
        "nrofvalues",
        "populate",
        "range",
        "rangewithindomain",
        "visible",
    }
)

PROMOTION_THRESHOLD = Decimal("0.9")
BELIEF_FIELDS = 13

_UINT = re.compile(r"[0-9]+\Z", re.ASCII)
_DECIMAL = re.compile(r"[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)\Z", re.ASCII)


class BeliefKind(enum.Enum):
    PROMOTED = "promoted"
    CANDIDATE = "candidate"


@dataclass(frozen=True)
class Dialect:
    """Intra-field syntax of a belief dump."""

    category_separator: str = " "
    label_separator: str = ","
    label_quote: str = '"'
    list_separator: str = ","
    list_open: str = "["
    list_close: str = "]"
    header_prefix: str = "Entity\tRelation"

    def split_labels(self, field: str) -> List[str]:
        if not field:
            return []
        reader = csv.reader([field], delimiter=self.label_separator, quotechar=self.label_quote, doublequote=True, strict=True)
        return next(reader)

    def join_labels(self, labels: List[str]) -> str:
        buf = io.StringIO()
        writer = csv.writer(
            buf, delimiter=self.label_separator, quotechar=self.label_quote, doublequote=True, lineterminator=""
        )
        writer.writerow(labels)
        return buf.getvalue()

    def split_categories(self, field: str) -> List[str]:
        return [c for c in field.split(self.category_separator) if c]

    def split_list(self, field: str) -> List[str]:
        field = field.strip()
        if field.startswith(self.list_open) and field.endswith(self.list_close):
            field = field[len(self.list_open) : -len(self.list_close)]
        if not field.strip():
            return []
        return [item.strip() for item in field.split(self.list_separator)]


FIXTURE_DIALECT = Dialect()


@dataclass(frozen=True)
class OntologyAssertion:
    subject: str
    predicate: str
    object: str


@dataclass
class NellBelief:
    entity: str
    relation: str
    value: str
    iterations: str
    probability: str
    source_summary: str
    entity_labels: List[str]
    value_labels: List[str]
    entity_best_label: Optional[str]
    value_best_label: Optional[str]
    entity_categories: List[str]
    value_categories: List[str]
    candidate_source: str
    kind: BeliefKind
    # validated forms of fields 4, 5 and 13
    promotion_iteration: Optional[int] = None
    promotion_probability: Optional[Decimal] = None
    executions: List[ComponentExecution] = field(default_factory=list)
    diagnostics: List[Exception] = field(default_factory=list)

    @property
    def below_threshold(self) -> bool:
        p = self.promotion_probability
        return p is not None and p < PROMOTION_THRESHOLD


def split_fields(line: str) -> List[str]:
    return line.rstrip("\n").rstrip("\r").split("\t")


def parse_ontology_line(line: str) -> OntologyAssertion:
    fields = split_fields(line)
    if len(fields) != 3:
        raise WrongFieldCount(len(fields), 3)
    subject, predicate, obj = fields
    if predicate.lower() not in ONTOLOGY_PREDICATES:
        raise UnknownPredicate(predicate)
    return OntologyAssertion(subject, predicate.lower(), obj)


def parse_decimal(text: str) -> Decimal:
    if not _DECIMAL.match(text):
        raise InvalidOperation(text)
    return Decimal(text)


def _probability(text: str) -> Decimal:
    try:
        p = parse_decimal(text.strip())
    except InvalidOperation:
        raise ProbabilityOutOfRange(f"probability {text!r} is not a decimal") from None
    if not 0 <= p <= 1:
        raise ProbabilityOutOfRange(f"probability {text!r} outside [0, 1]")
    return p


def _iteration(text: str) -> int:
    text = text.strip()
    if not _UINT.match(text):
        raise NonIntegerIteration(f"iteration {text!r} is not a non-negative integer")
    return int(text)


def is_header(line: str, dialect: Dialect = FIXTURE_DIALECT) -> bool:
    return line.startswith(dialect.header_prefix)


def parse_belief_line(line: str, kind: BeliefKind, dialect: Dialect = FIXTURE_DIALECT) -> NellBelief:
    """Parse one belief row and validate fields 4, 5 and 13 for its kind.

    A promoted row scoring below 0.9 is accepted but triggers a
    :class:`PromotionThresholdWarning`.
    """
    fields = split_fields(line)
    if len(fields) != BELIEF_FIELDS:
        raise WrongFieldCount(len(fields), BELIEF_FIELDS)
    try:
        entity_labels = dialect.split_labels(fields[6])
        value_labels = dialect.split_labels(fields[7])
    except csv.Error as exc:
        raise MalformedField(f"label list: {exc}") from exc
    belief = NellBelief(
        entity=fields[0],
        relation=fields[1],
        value=fields[2],
        iterations=fields[3],
        probability=fields[4],
        source_summary=fields[5],
        entity_labels=entity_labels,
        value_labels=value_labels,
        entity_best_label=fields[8] or None,
        value_best_label=fields[9] or None,
        entity_categories=dialect.split_categories(fields[10]),
        value_categories=dialect.split_categories(fields[11]),
        candidate_source=fields[12],
        kind=kind,
    )
    if kind is BeliefKind.PROMOTED:
        belief.promotion_iteration = _iteration(fields[3])
        belief.promotion_probability = _probability(fields[4])
        belief.executions = parse_candidate_source(
            fields[12], relation=fields[1], diagnostics=belief.diagnostics
        )
        if belief.below_threshold:
            warnings.warn(
                PromotionThresholdWarning(
                    f"promoted belief ({fields[0]}, {fields[1]}, {fields[2]}) has probability "
                    f"{fields[4]} < {PROMOTION_THRESHOLD}"
                ),
                stacklevel=2,
            )
    else:
        raw_iters = dialect.split_list(fields[3])
        raw_probs = dialect.split_list(fields[4])
        records = scan_records(fields[12])
        if not len(raw_iters) == len(raw_probs) == len(records):
            raise IterationProbabilityArityMismatch(len(raw_iters), len(raw_probs), len(records))
        iterations = [_iteration(i) for i in raw_iters]
        probabilities = [_probability(p) for p in raw_probs]
        belief.executions = parse_candidate_source(
            records, iterations, probabilities, relation=fields[1], diagnostics=belief.diagnostics
        )
    return belief


# -- file access -----------------------------------------------------------------

GZIP_MAGIC = b"\x1f\x8b"


def open_text(path) -> IO[str]:
    """Open a dump for reading, transparently gunzipping it if needed."""
    raw = open(path, "rb")
    magic = raw.peek(2)[:2] if hasattr(raw, "peek") else b""
    if magic == GZIP_MAGIC:
        raw = gzip.GzipFile(fileobj=raw, mode="rb")
    return io.TextIOWrapper(raw, encoding="utf-8", newline="")


def iter_lines(path) -> Iterator[Tuple[int, str]]:
    """Yield ``(line number, line)`` with the line terminator removed."""
    with open_text(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if line.endswith("\n"):
                line = line[:-1]
                if line.endswith("\r"):
                    line = line[:-1]
            yield lineno, line


def read_ontology(path) -> Iterator[Tuple[int, OntologyAssertion | Exception]]:
    """Yield parsed ontology rows; malformed rows come back as the exception."""
    for lineno, line in iter_lines(path):
        if not line.strip():
            continue
        try:
            yield lineno, parse_ontology_line(line)
        except (WrongFieldCount, UnknownPredicate) as exc:
            yield lineno, exc
