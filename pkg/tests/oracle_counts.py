"""Independent statement counts for generated belief files.

Reads the TSV with the stdlib only (csv, re, json) and applies per-component
counting rules, without touching the converter. Used to pin and cross-check
the numbers the pipeline reports.
"""

from __future__ import annotations

import csv
import json
import re
from collections import Counter

ENCODING = {"reification": 4, "nary": 2, "ngraphs": 1, "singleton": 2}
ALIAS = {
    "CPL1": "CPL", "CPL2": "CPL", "CSEAL": "SEAL", "CML": "CMC",
    "KnowledgeIntegrator": "MBL", "Knowledge Integrator": "MBL", "ErrorBasedIntegrator": "MBL", "EntityResolverCleanup": "MBL",
}
RECORD = re.compile(r'(?:^\[|(?<="),)([^,=]+),iteration=[^,]*,prob=[^,]*,time=[^,]*,token=\(([^)]*)\),source="((?:[^"\\]|\\.)*)"')
PIECE = re.compile(r"'(?:[^']|'')*'|[^;|']+|[;|]")


def source_items(raw: str) -> list:
    text = json.loads('"' + raw + '"')
    items, fields, cur = [], [], ""
    for piece in PIECE.findall(text):
        if piece == "|":
            fields.append(cur)
            cur = ""
        elif piece == ";":
            items.append(fields + [cur])
            fields, cur = [], ""
        else:
            cur += piece
    if text:
        items.append(fields + [cur])
    return items


def payload_count(component: str, items: list) -> int:
    if component in ("AliasMatcher", "KbManipulation", "SEAL", "Semparse"):
        return 1
    if component == "LE":
        return 0
    if component == "CMC":
        return 5 * len(items)
    if component == "CPL":
        return 4 * len(items)
    if component in ("LatLong", "OE"):
        return (5 if component == "LatLong" else 4) * len(items)
    if component == "MBL":
        return len(items[0])
    if component == "OntologyModifier":
        return 2
    if component == "PRA":
        return sum(5 + 2 * (len(item) - 2) for item in items)
    if component == "RL":
        kinds = Counter(item[0] for item in items)
        return 8 + 2 * kinds["var"] + 5 * kinds["pred"]
    if component == "SpreadsheetEdits":
        return 6
    raise ValueError(component)


def count_file(path, kind: str, model: str, assert_candidates: bool = False):
    """(encoding, asserted, auxiliary, metadata, beliefs, executions by component)."""
    enc = asserted = aux = meta = beliefs = 0
    executions: Counter = Counter()
    with open(path, encoding="utf-8", newline="") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("Entity\tRelation"):
                continue
            f = line.split("\t")
            beliefs += 1
            generalization = f[1] == "concept:generalizations"
            literal = not generalization and not f[2].startswith("concept:") or f[1] in ("concept:cityhaswebsite", "concept:cityhaspopulation")
            if model == "ndfluents":
                enc += 3 if literal else 5
            else:
                enc += ENCODING[model]
            if model in ("reification", "nary") and (kind == "promoted" or assert_candidates):
                asserted += 1
            labels = lambda s: len(next(csv.reader([s]))) if s else 0
            aux += labels(f[6]) + bool(f[8]) + len(f[10].split())
            if not literal:
                aux += labels(f[7]) + bool(f[9]) + len(f[11].split())
            meta += 3 if kind == "promoted" else 1
            for name, token, raw in RECORD.findall(f[12]):
                component = ALIAS.get(name, name)
                executions[component] += 1
                geo = token.count(",") == 2
                meta += 7 + (5 if geo else 4) + payload_count(component, source_items(raw))
    return enc, asserted, aux, meta, beliefs, executions
