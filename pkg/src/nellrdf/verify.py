"""Cross-model equivalence check over converted outputs.

Each file is dereified with its model, then reduced to a canonical form that
no longer depends on the model: the recovered statements, and every other
triple with the model-specific attachment term replaced by a marker derived
from the statement it annotates. Files of one run must agree on both.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import MalformedEncoding
from .ingest import open_text
from .rdf import IRI, Quad, iter_nquads, parse_trig, quad_nq, triple_nt
from .reify import ModelId, dereify_detailed

MARKER_PREFIX = "urn:nellrdf:statement:"


def statement_marker(statement_line: str) -> IRI:
    return IRI(MARKER_PREFIX + hashlib.sha256(statement_line.encode("utf-8")).hexdigest()[:32])


@dataclass
class Canonical:
    """Model-independent content of one or more output files."""

    statements: Counter = field(default_factory=Counter)
    metadata: Counter = field(default_factory=Counter)

    def update(self, other: "Canonical") -> None:
        self.statements.update(other.statements)
        self.metadata.update(other.metadata)


@dataclass
class ModelReport:
    model: ModelId
    files: List[str]
    statements: int
    metadata: int


@dataclass
class VerifyReport:
    models: List[ModelReport]
    divergence: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.divergence is None

    def render(self) -> str:
        lines = [f"{m.model.value:<12} statements={m.statements} metadata={m.metadata} files={','.join(m.files)}" for m in self.models]
        lines.append("PASS" if self.ok else f"FAIL: {self.divergence}")
        return "\n".join(lines)


def read_quads(path) -> List[Tuple[int, Quad]]:
    """``(line number, quad)`` pairs; TriG files report statement ordinals."""
    path = Path(path)
    name = path.name[:-3] if path.name.endswith(".gz") else path.name
    with open_text(path) as fh:
        if name.endswith(".trig"):
            return list(enumerate(parse_trig(fh.read()), 1))
        return list(iter_nquads(fh))


def canonicalize(numbered: Sequence[Tuple[int, Quad]], model: ModelId, source: str = "<input>") -> Canonical:
    quads = [q for _, q in numbered]
    try:
        found = dereify_detailed(quads, model)
    except MalformedEncoding as exc:
        line = _first_line(numbered, exc.term)
        raise MalformedEncoding(f"{source}:{line}: {exc}", exc.term) from exc
    canon = Canonical()
    markers: Dict[IRI, IRI] = {}
    recovered = set()
    for stmt, attachment in found.statements:
        line = triple_nt(stmt)
        canon.statements[line] += 1
        markers[attachment] = statement_marker(line)
        recovered.add(stmt)
    for i, (t, g) in enumerate(quads):
        if i in found.encoding:
            continue
        if g is None and t in recovered:
            # an asserted copy of a statement; not every model asserts it
            continue
        s, p, o = (markers.get(x, x) for x in t)
        canon.metadata[quad_nq(Quad((s, p, o), markers.get(g, g)))] += 1
    return canon


def _first_line(numbered, term) -> str:
    if term is None:
        return "?"
    for lineno, (t, g) in numbered:
        if term in t or term == g:
            return str(lineno)
    return "?"


def _diff(a: Counter, b: Counter, what: str, a_name: str, b_name: str) -> Optional[str]:
    if a == b:
        return None
    for key in sorted(set(a) | set(b)):
        if a[key] != b[key]:
            return f"{what} {key} occurs {a[key]}x in {a_name} but {b[key]}x in {b_name}"
    return None


def verify_cross_model(paths: Sequence[Tuple[ModelId, str]]) -> VerifyReport:
    """Compare the canonical forms of each model's files (grouped by model)."""
    by_model: Dict[ModelId, Canonical] = {}
    files: Dict[ModelId, List[str]] = {}
    for model, path in paths:
        canon = canonicalize(read_quads(path), model, str(path))
        by_model.setdefault(model, Canonical()).update(canon)
        files.setdefault(model, []).append(Path(path).name)
    report = VerifyReport(
        [ModelReport(m, files[m], sum(c.statements.values()), sum(c.metadata.values())) for m, c in by_model.items()]
    )
    models = list(by_model)
    if not models:
        report.divergence = "no input files"
        return report
    ref = models[0]
    for other in models[1:]:
        a, b = by_model[ref], by_model[other]
        report.divergence = _diff(a.statements, b.statements, "statement", ref.value, other.value) or _diff(
            a.metadata, b.metadata, "metadata triple", ref.value, other.value
        )
        if report.divergence:
            break
    return report
