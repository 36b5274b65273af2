"""Streaming conversion driver: ingest, translate, reify, emit.

Belief rows are read lazily and converted in fixed-size chunks, so memory is
bounded by the ontology plus a handful of chunks regardless of dump size.
Each chunk is turned into finished text per output file (in-process or in a
worker process); a single writer appends whole chunks, so one belief's
triples are never split across writes.
"""

from __future__ import annotations

import gzip
import json
import logging
import sys
import time
import warnings
from collections import Counter, deque
from concurrent.futures import FIRST_COMPLETED, Future, ProcessPoolExecutor, wait
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .beliefs import translate_belief
from .errors import NellRdfError, PromotionThresholdWarning
from .grammar import ComponentId
from .ingest import BeliefKind, iter_lines, is_header, parse_belief_line, read_ontology
from .metadata import Distribution, emit_dataset_metadata, metadata_declarations
from .ontology import OntologyIndex, translate_ontology
from .provenance import ProvVocabulary, emit_metadata, emit_ontology
from .rdf import quad_nq, serialize_quads, triple_nt, Quad
from .reify import ModelId, reify
from .vocab import Namespaces

log = logging.getLogger(__name__)

GZIP_LEVEL = 6
DEFAULT_CHUNK = 512
KIND_FILE_NAMES = {BeliefKind.PROMOTED: "promoted", BeliefKind.CANDIDATE: "candidates"}

Diagnostic = Dict[str, object]
DiagnosticSink = Callable[[Diagnostic], None]


def stderr_sink(d: Diagnostic) -> None:
    sys.stderr.write(json.dumps(d, ensure_ascii=False, sort_keys=True) + "\n")


def parse_model(name: str) -> List[ModelId]:
    if name == "all":
        return list(ModelId)
    for m in ModelId:
        if name in (m.value, m.name):
            return [m]
    raise ValueError(f"unknown model {name!r}; expected one of {', '.join(m.value for m in ModelId)} or all")


@dataclass
class RunConfig:
    ontology: Path
    beliefs: List[Tuple[Path, BeliefKind]]
    out_dir: Path
    models: List[ModelId] = field(default_factory=lambda: list(ModelId))
    base_iri: Optional[str] = None
    deterministic: bool = False
    gzip: bool = False
    assert_candidates: bool = False
    workers: int = 1
    ngraphs_format: str = "nquads"
    chunk_size: int = DEFAULT_CHUNK

    def __post_init__(self):
        if not self.models:
            raise ValueError("at least one model is required")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.ngraphs_format not in ("nquads", "trig"):
            raise ValueError("ngraphs format must be nquads or trig")
        self.ontology = Path(self.ontology)
        self.out_dir = Path(self.out_dir)
        self.beliefs = [(Path(p), BeliefKind(k)) for p, k in self.beliefs]

    def output_format(self, model: ModelId, kind: BeliefKind) -> str:
        kind = BeliefKind(kind)
        if model is ModelId.NamedGraphs:
            return self.ngraphs_format
        return "nquads" if kind is BeliefKind.CANDIDATE else "ntriples"

    def output_name(self, model: ModelId, kind: BeliefKind) -> str:
        ext = {"ntriples": "nt", "nquads": "nq", "trig": "trig"}[self.output_format(model, kind)]
        return self._gz(f"nellrdf.{KIND_FILE_NAMES[BeliefKind(kind)]}.{model.value}.{ext}")

    def _gz(self, name: str) -> str:
        return name + ".gz" if self.gzip else name

    @property
    def ontology_name(self) -> str:
        return self._gz("nellrdf.ontology.nt")

    @property
    def prov_ontology_name(self) -> str:
        return self._gz("nellrdf.prov-ontology.nt")

    @property
    def metadata_name(self) -> str:
        return self._gz("nellrdf.metadata.nt")


@dataclass
class ModelCounts:
    """Statements written for one model, split by origin."""

    encoding: int = 0
    asserted: int = 0
    auxiliary: int = 0
    metadata: int = 0

    @property
    def total(self) -> int:
        return self.encoding + self.asserted + self.auxiliary + self.metadata

    def add(self, other: Sequence[int]) -> None:
        self.encoding += other[0]
        self.asserted += other[1]
        self.auxiliary += other[2]
        self.metadata += other[3]


@dataclass
class RunStats:
    rows_read: int = 0
    rows_skipped: int = 0
    beliefs_converted: int = 0
    triples_emitted: int = 0
    quads_emitted: int = 0
    executions_by_component: Dict[str, int] = field(default_factory=lambda: {c.value: 0 for c in ComponentId})
    diagnostics: int = 0
    promotion_warnings: int = 0
    ontology_triples: int = 0
    prov_ontology_triples: int = 0
    models: Dict[str, ModelCounts] = field(default_factory=dict)
    files: Dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    def to_json(self) -> str:
        d = asdict(self)
        for name, counts in self.models.items():
            d["models"][name]["total"] = counts.total
        return json.dumps(d, indent=2, sort_keys=True) + "\n"


# -- per-belief conversion ------------------------------------------------------------


@dataclass
class ConvertContext:
    """Everything a worker needs; built once and shipped to each process."""

    base: str
    index: OntologyIndex
    models: List[ModelId]
    formats: Dict[ModelId, str]
    kind: BeliefKind
    assert_candidates: bool

    def __post_init__(self):
        self.ns = Namespaces(self.base)
        self.vocab = ProvVocabulary(self.ns)


@dataclass
class ChunkResult:
    texts: Dict[ModelId, str]
    counts: Dict[ModelId, List[int]]  # encoding, asserted, auxiliary, metadata, quads
    rows: int = 0
    skipped: int = 0
    converted: int = 0
    executions: Counter = field(default_factory=Counter)
    diagnostics: List[Diagnostic] = field(default_factory=list)
    threshold_warnings: List[Tuple[int, str]] = field(default_factory=list)


def _diag(lineno: int, kind: str, message: str) -> Diagnostic:
    return {"line": lineno, "kind": kind, "message": message}


def convert_rows(rows: Sequence[Tuple[int, str]], ctx: ConvertContext) -> ChunkResult:
    """Convert parsed-on-the-fly belief rows into per-model output text."""
    parts: Dict[ModelId, List[str]] = {m: [] for m in ctx.models}
    counts = {m: [0, 0, 0, 0, 0] for m in ctx.models}
    res = ChunkResult({}, counts)
    ns, vocab, kind = ctx.ns, ctx.vocab, ctx.kind
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PromotionThresholdWarning)
        for lineno, line in rows:
            res.rows += 1
            seen = len(caught)
            notes: list = []
            try:
                b = parse_belief_line(line, kind)
                statement, aux = translate_belief(b, ns, ctx.index, notes)
                rendered = [(m, reify(statement, m, kind, ns, ctx.assert_candidates)) for m in ctx.models]
                # metadata differs between models only in the attachment IRI, so it is
                # rendered once and the IRI is swapped in per model
                first = rendered[0][1]
                meta = emit_metadata(
                    first.attachment, kind, b.executions, vocab, first.belief_hash,
                    b.promotion_iteration, b.promotion_probability,
                )
            except (NellRdfError, ValueError) as exc:
                res.skipped += 1
                res.diagnostics.append(_diag(lineno, getattr(exc, "kind", type(exc).__name__), str(exc)))
                del caught[seen:]
                continue
            for w in caught[seen:]:
                if issubclass(w.category, PromotionThresholdWarning):
                    res.threshold_warnings.append((lineno, str(w.message)))
            del caught[seen:]
            res.converted += 1
            res.executions.update(e.component.value for e in b.executions)
            for exc in b.diagnostics:
                res.diagnostics.append(_diag(lineno, getattr(exc, "kind", type(exc).__name__), str(exc)))
            for note in notes:
                res.diagnostics.append(_diag(lineno, "note", str(note)))
            aux_text = _lines(aux)
            meta_text = _lines(meta)
            first_ref = f"<{first.attachment.value}>"
            for m, r in rendered:
                c = counts[m]
                fmt = ctx.formats[m]
                if fmt == "trig":
                    parts[m].append(serialize_quads(r.quads(), "trig").decode("utf-8"))
                else:
                    parts[m].append("\n".join(map(quad_nq, r.quads())) + "\n")
                parts[m].append(aux_text)
                parts[m].append(meta_text if r is first else meta_text.replace(first_ref, f"<{r.attachment.value}>"))
                c[0] += len(r.encoding)
                c[1] += r.asserted is not None
                c[2] += len(aux)
                c[3] += len(meta)
                c[4] += sum(1 for q in r.encoding if isinstance(q, Quad))
    res.texts = {m: "".join(p) for m, p in parts.items()}
    return res


def _lines(triples: Sequence) -> str:
    return "\n".join(map(triple_nt, triples)) + "\n" if triples else ""


_WORKER_CTX: Optional[ConvertContext] = None


def _init_worker(ctx: ConvertContext) -> None:
    global _WORKER_CTX
    _WORKER_CTX = ctx


def _worker_convert(rows: List[Tuple[int, str]]) -> ChunkResult:
    assert _WORKER_CTX is not None
    return convert_rows(rows, _WORKER_CTX)


def iter_chunks(path: Path, size: int) -> Iterator[List[Tuple[int, str]]]:
    """Non-blank, non-header rows of a belief file in chunks of ``size``."""
    chunk: List[Tuple[int, str]] = []
    for lineno, line in iter_lines(path):
        if not line.strip() or is_header(line):
            continue
        chunk.append((lineno, line))
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def _results(chunks: Iterable[List[Tuple[int, str]]], ctx: ConvertContext, workers: int, ordered: bool) -> Iterator[ChunkResult]:
    if workers <= 1:
        for chunk in chunks:
            yield convert_rows(chunk, ctx)
        return
    limit = 2 * workers
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(ctx,)) as pool:
        pending: deque = deque()
        for chunk in chunks:
            pending.append(pool.submit(_worker_convert, chunk))
            while len(pending) >= limit:
                yield from _drain(pending, ordered)
        while pending:
            yield from _drain(pending, ordered)


def _drain(pending: deque, ordered: bool) -> Iterator[ChunkResult]:
    if ordered:
        yield pending.popleft().result()
        return
    done, _ = wait(list(pending), return_when=FIRST_COMPLETED)
    for fut in list(pending):
        if fut in done:
            pending.remove(fut)
            yield fut.result()


# -- output ---------------------------------------------------------------------------


class OutputFile:
    """Append-only text sink, optionally gzip-compressed with a fixed header."""

    def __init__(self, path: Path, compress: bool, deterministic: bool):
        self.path = path
        self._raw = open(path, "wb")
        if compress:
            self._fh = gzip.GzipFile(
                filename="", mode="wb", fileobj=self._raw, compresslevel=GZIP_LEVEL, mtime=0 if deterministic else None
            )
        else:
            self._fh = self._raw
        self.statements = 0

    def write(self, text: str) -> None:
        if text:
            self._fh.write(text.encode("utf-8"))

    def close(self) -> None:
        if self._fh is not self._raw:
            self._fh.close()
        self._raw.close()


def _write_triples(cfg: RunConfig, name: str, triples) -> int:
    out = OutputFile(cfg.out_dir / name, cfg.gzip, cfg.deterministic)
    try:
        n = 0
        buf = []
        for t in triples:
            buf.append(triple_nt(t) + "\n")
            n += 1
        out.write("".join(buf))
    finally:
        out.close()
    return n


def load_ontology(cfg: RunConfig, ns: Namespaces, sink: DiagnosticSink, stats: RunStats):
    assertions = []
    for lineno, item in read_ontology(cfg.ontology):
        if isinstance(item, Exception):
            stats.diagnostics += 1
            sink({"file": str(cfg.ontology), **_diag(lineno, getattr(item, "kind", type(item).__name__), str(item))})
        else:
            assertions.append(item)
    notes: list = []
    index, triples = translate_ontology(assertions, ns, notes)
    for note in notes:
        stats.diagnostics += 1
        sink({"file": str(cfg.ontology), "line": 0, "kind": "note", "message": str(note)})
    return index, triples


def run_convert(cfg: RunConfig, sink: DiagnosticSink = stderr_sink) -> RunStats:
    """Convert every configured belief file into every selected model."""
    start = time.perf_counter()
    ns = Namespaces.from_env(cfg.base_iri)
    stats = RunStats(models={m.value: ModelCounts() for m in cfg.models})
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    index, onto_triples = load_ontology(cfg, ns, sink, stats)
    stats.ontology_triples = _write_triples(cfg, cfg.ontology_name, onto_triples)
    stats.prov_ontology_triples = _write_triples(cfg, cfg.prov_ontology_name, emit_ontology(ProvVocabulary(ns)))
    del onto_triples

    outputs: Dict[Tuple[BeliefKind, ModelId], OutputFile] = {}
    file_counts: Dict[Tuple[BeliefKind, ModelId], int] = Counter()
    beliefs_per_kind: Counter = Counter()
    try:
        for path, kind in cfg.beliefs:
            for m in cfg.models:
                if (kind, m) not in outputs:
                    outputs[(kind, m)] = OutputFile(cfg.out_dir / cfg.output_name(m, kind), cfg.gzip, cfg.deterministic)
            ctx = ConvertContext(
                ns.base, index, cfg.models, {m: cfg.output_format(m, kind) for m in cfg.models}, kind, cfg.assert_candidates
            )
            chunks = iter_chunks(path, cfg.chunk_size)
            for res in _results(chunks, ctx, cfg.workers, ordered=cfg.deterministic or cfg.workers == 1):
                for m in cfg.models:
                    outputs[(kind, m)].write(res.texts[m])
                    c = res.counts[m]
                    stats.models[m.value].add(c)
                    written = sum(c[:4])
                    file_counts[(kind, m)] += written
                    stats.quads_emitted += c[4]
                    stats.triples_emitted += written - c[4]
                stats.rows_read += res.rows
                stats.rows_skipped += res.skipped
                stats.beliefs_converted += res.converted
                beliefs_per_kind[kind] += res.converted
                for name, n in res.executions.items():
                    stats.executions_by_component[name] += n
                for d in res.diagnostics:
                    stats.diagnostics += 1
                    sink({"file": str(path), **d})
                for lineno, message in res.threshold_warnings:
                    stats.promotion_warnings += 1
                    stats.diagnostics += 1
                    sink({"file": str(path), **_diag(lineno, "PromotionThresholdWarning", message)})
                    warnings.warn(PromotionThresholdWarning(f"{path}:{lineno}: {message}"), stacklevel=2)
    finally:
        for out in outputs.values():
            out.close()

    meta = metadata_declarations(ns)
    for m in cfg.models:
        dists = [
            Distribution(m.value, KIND_FILE_NAMES[kind], cfg.output_name(m, kind), cfg.output_format(m, kind), cfg.gzip, file_counts[(kind, m)])
            for kind, model in outputs
            if model is m
        ]
        meta += emit_dataset_metadata(ns, m.value, stats.models[m.value].total, dists, sum(beliefs_per_kind.values()))
    _write_triples(cfg, cfg.metadata_name, meta)

    stats.files = {cfg.output_name(m, k): file_counts[(k, m)] for k, m in outputs}
    stats.wall_time = 0.0 if cfg.deterministic else round(time.perf_counter() - start, 3)
    (cfg.out_dir / "stats.json").write_text(stats.to_json(), encoding="utf-8")
    return stats
