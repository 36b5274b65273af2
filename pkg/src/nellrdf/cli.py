"""Command-line entry point: ``convert``, ``verify`` and ``gen-fixtures``."""

from __future__ import annotations

import argparse
import logging
import sys
import warnings
from pathlib import Path
from typing import List, Optional

from .errors import MalformedEncoding, PromotionThresholdWarning
from .ingest import BeliefKind
from .pipeline import RunConfig, parse_model, run_convert
from .rdf import ParseError
from .vocab import BASE_IRI_ENV


def _convert(args) -> int:
    kinds = args.kind or ["promoted"]
    if len(kinds) == 1:
        kinds = kinds * len(args.beliefs)
    if len(kinds) != len(args.beliefs):
        print("error: give one --kind, or one per --beliefs", file=sys.stderr)
        return 2
    try:
        cfg = RunConfig(
            ontology=args.ontology,
            beliefs=list(zip(args.beliefs, kinds)),
            out_dir=args.out,
            models=parse_model(args.model),
            base_iri=args.base_iri,
            deterministic=args.deterministic,
            gzip=args.gzip,
            assert_candidates=args.assert_candidates,
            workers=args.workers,
            ngraphs_format=args.ngraphs_format,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        with warnings.catch_warnings():
            # already reported as a JSON diagnostic line
            warnings.simplefilter("ignore", PromotionThresholdWarning)
            stats = run_convert(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(
        f"{stats.beliefs_converted} beliefs converted, {stats.rows_skipped} rows skipped, "
        f"{stats.triples_emitted} triples and {stats.quads_emitted} quads written to {cfg.out_dir}",
        file=sys.stderr,
    )
    return 0


def _verify(args) -> int:
    from .verify import verify_cross_model

    paths = []
    for spec in args.model:
        name, sep, path = spec.partition(":")
        if not sep or not path:
            print(f"error: expected MODEL:FILE, got {spec!r}", file=sys.stderr)
            return 2
        try:
            (model,) = parse_model(name)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        paths.append((model, path))
    try:
        report = verify_cross_model(paths)
    except (MalformedEncoding, ParseError, OSError) as exc:
        print(f"FAIL: {exc}")
        return 1
    print(report.render())
    return 0 if report.ok else 1


def _gen_fixtures(args) -> int:
    from .fixtures import write_fixtures

    info = write_fixtures(Path(args.out), args.beliefs, args.seed, args.candidates)
    print(f"wrote {info['promoted']['rows']} promoted and {info['candidates']['rows']} candidate rows to {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nellrdf", description="Convert NELL dumps to RDF with provenance metadata.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    conv = sub.add_parser("convert", help="convert an ontology and belief files")
    conv.add_argument("--ontology", required=True, type=Path)
    conv.add_argument("--beliefs", required=True, action="append", type=Path, help="belief file (repeatable)")
    conv.add_argument(
        "--kind", action="append", choices=[k.value for k in BeliefKind], help="kind of each --beliefs file (default promoted)"
    )
    conv.add_argument("--model", default="all", help="reification, nary, ngraphs, singleton, ndfluents or all")
    conv.add_argument("--base-iri", default=None, help=f"base IRI for minted terms (falls back to ${BASE_IRI_ENV})")
    conv.add_argument("--out", required=True, type=Path)
    conv.add_argument("--deterministic", action="store_true", help="ordered output, fixed gzip headers, no timings")
    conv.add_argument("--gzip", action="store_true")
    conv.add_argument("--assert-candidates", action="store_true", help="also assert candidate base triples")
    conv.add_argument("--workers", type=int, default=1)
    conv.add_argument("--ngraphs-format", choices=["nquads", "trig"], default="nquads")
    conv.set_defaults(func=_convert)

    ver = sub.add_parser("verify", help="check that several model outputs hold the same data")
    ver.add_argument("--model", required=True, action="append", metavar="MODEL:FILE")
    ver.set_defaults(func=_verify)

    gen = sub.add_parser("gen-fixtures", help="write a synthetic corpus")
    gen.add_argument("--beliefs", type=int, required=True)
    gen.add_argument("--candidates", type=int, default=None, help="candidate rows (default: same as --beliefs)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, type=Path)
    gen.set_defaults(func=_gen_fixtures)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return args.func(args)
