"""Exception and warning types shared across the converter."""

from __future__ import annotations


class NellRdfError(ValueError):
    """Base class for every recoverable conversion error."""

    kind = "NellRdfError"


class InvalidIri(NellRdfError):
    kind = "InvalidIri"


class EmptyToken(NellRdfError):
    kind = "EmptyToken"


# -- ingest ------------------------------------------------------------------


class IngestError(NellRdfError):
    kind = "IngestError"


class WrongFieldCount(IngestError):
    kind = "WrongFieldCount"

    def __init__(self, count: int, expected: int):
        super().__init__(f"expected {expected} tab-separated fields, got {count}")
        self.count = count
        self.expected = expected


class UnknownPredicate(IngestError):
    kind = "UnknownPredicate"

    def __init__(self, token: str):
        super().__init__(f"unknown ontology predicate {token!r}")
        self.token = token


class MalformedField(IngestError):
    kind = "MalformedField"


class NonIntegerIteration(IngestError):
    kind = "NonIntegerIteration"


class ProbabilityOutOfRange(IngestError):
    kind = "ProbabilityOutOfRange"


class IterationProbabilityArityMismatch(IngestError):
    kind = "IterationProbabilityArityMismatch"

    def __init__(self, iterations: int, probabilities: int, records: int):
        super().__init__(
            f"field 4 has {iterations} iterations, field 5 has {probabilities} "
            f"probabilities, field 13 has {records} records"
        )
        self.iterations = iterations
        self.probabilities = probabilities
        self.records = records


# -- candidate-source grammar -------------------------------------------------


class GrammarError(IngestError):
    kind = "GrammarError"

    def __init__(self, offset: int, expected: str, text: str = ""):
        snippet = text[offset : offset + 20] if text else ""
        super().__init__(f"at offset {offset}: expected {expected}, found {snippet!r}")
        self.offset = offset
        self.expected = expected


class UnknownComponent(IngestError):
    kind = "UnknownComponent"

    def __init__(self, name: str):
        super().__init__(f"unknown component {name!r}")
        self.name = name


class TokenShapeError(GrammarError):
    kind = "TokenShapeError"


# -- reification ---------------------------------------------------------------


class MalformedEncoding(NellRdfError):
    kind = "MalformedEncoding"

    def __init__(self, message: str, term=None):
        super().__init__(message)
        self.term = term


class PromotionThresholdWarning(UserWarning):
    """A promoted belief scored below the 0.9 promotion threshold."""
