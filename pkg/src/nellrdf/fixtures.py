"""Synthetic NELL-style dumps for tests and benchmarks.

The generator is seeded and fully deterministic. Its corpus exercises every
component (plus historical aliases), all sixteen ontology predicates,
escapes and non-ASCII text, literal-valued relations, generalizations, and
a share of promoted rows scoring under the promotion threshold.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from .grammar import ComponentId
from .ingest import FIXTURE_DIALECT, BeliefKind

HEADER = "\t".join(
    [
        "Entity",
        "Relation",
        "Value",
        "Iteration of Promotion",
        "Probability",
        "Source",
        "Entity literalStrings",
        "Value literalStrings",
        "Best Entity literalString",
        "Best Value literalString",
        "Categories for Entity",
        "Categories for Value",
        "Candidate Source",
    ]
)

CATEGORIES = ["location", "city", "country", "river", "athlete", "sportsteam", "person", "website"]
GENERALIZATION_OF = {
    "location": "everypromotedthing",
    "city": "location",
    "country": "location",
    "river": "location",
    "athlete": "person",
    "sportsteam": "everypromotedthing",
    "person": "everypromotedthing",
    "website": "everypromotedthing",
}

# relation -> (domain, range); ranges prefixed with xsd: are literal-valued
RELATIONS: Dict[str, Tuple[str, str]] = {
    "citylocatedincountry": ("city", "country"),
    "countryhascapital": ("country", "city"),
    "riverflowsthroughcity": ("river", "city"),
    "athleteplaysforteam": ("athlete", "sportsteam"),
    "teamhasathlete": ("sportsteam", "athlete"),
    "personbornincity": ("person", "city"),
    "cityhaswebsite": ("city", "xsd:string"),
    "cityhaspopulation": ("city", "xsd:integer"),
}

NAMES = {
    "city": ["paris", "zürich", "são paulo", "東京", "new york", "köln", "st. louis", "o'fallon"],
    "country": ["france", "switzerland", "brazil", "japan", "usa", "germany", "côte d'ivoire"],
    "river": ["seine", "rhine", "amazon", "sumida"],
    "athlete": ["ronaldo", "zidane", "müller", "ichiro"],
    "sportsteam": ["psg", "fc köln", "mariners", "santos"],
    "person": ["ada lovelace", "josé", "李白"],
}

LABEL_VARIANTS = [
    lambda n: [n.title()],
    lambda n: [n, n.upper()],
    lambda n: [n.title(), f'the "{n}"'],
    lambda n: [f"{n}, capital", f"{n} \\ alt"],
    lambda n: [],
]

ALIASES = {
    ComponentId.CPL: ["CPL1", "CPL2"],
    ComponentId.SEAL: ["CSEAL"],
    ComponentId.CMC: ["CML"],
    ComponentId.MBL: ["KnowledgeIntegrator", "Knowledge Integrator", "ErrorBasedIntegrator", "EntityResolverCleanup"],
}

COMPONENTS = list(ComponentId)


def ontology_rows() -> List[Tuple[str, str, str]]:
    """A small ontology using all sixteen NELL ontology predicates."""
    rows: List[Tuple[str, str, str]] = []
    for cat in ["everypromotedthing"] + CATEGORIES:
        c = f"concept:{cat}"
        rows.append((c, "memberofsets", "rtwcategory"))
        rows.append((c, "description", f"Category of {cat}s, e.g. \"{cat}\" (catégorie)"))
        rows.append((c, "visible", "true"))
        rows.append((c, "populate", "true"))
        rows.append((c, "humanformat", f"{cat}(arg1)"))
        if cat in GENERALIZATION_OF:
            rows.append((c, "generalizations", f"concept:{GENERALIZATION_OF[cat]}"))
    rows.append(("concept:city", "mutexpredicates", "concept:country"))
    rows.append(("concept:river", "mutexpredicates", "concept:athlete"))
    for rel, (dom, rng) in RELATIONS.items():
        r = f"concept:{rel}"
        rows.append((r, "memberofsets", "rtwrelation"))
        rows.append((r, "domain", f"concept:{dom}"))
        rows.append((r, "range", rng if rng.startswith("xsd:") else f"concept:{rng}"))
        rows.append((r, "description", f"{dom} {rel} {rng}"))
        rows.append((r, "humanformat", f"arg1 {rel} arg2"))
        rows.append((r, "antisymmetric", "true"))
        rows.append((r, "antireflexive", "true" if dom != rng else "false"))
        rows.append((r, "domainwithinrange", "false"))
        rows.append((r, "rangewithindomain", "false"))
        rows.append((r, "visible", "true"))
        rows.append((r, "populate", "true"))
        rows.append((r, "nrofvalues", "1" if rel in ("citylocatedincountry", "cityhaspopulation") else "any"))
    rows.append(("concept:countryhascapital", "inverse", "concept:capitalofcountry"))
    rows.append(("concept:athleteplaysforteam", "inverse", "concept:teamhasathlete"))
    rows.append(("concept:athleteplaysforteam", "mutexpredicates", "concept:personbornincity"))
    rows.append(("concept:athleteplaysforteam", "instancetype", "concept:athlete"))
    rows.append(("concept:generalizations", "memberofsets", "rtwrelation"))
    return rows


def _quote_source_field(text: str) -> str:
    if not text or any(c in text for c in ";|'") or text != text.strip():
        return "'" + text.replace("'", "''") + "'"
    return text


def _source(items: List[List[str]]) -> str:
    return ";".join("|".join(_quote_source_field(f) for f in item) for item in items)


def _quote(text: str) -> str:
    out = text.replace("\\", "\\\\").replace('"', '\\"')
    return '"' + out.replace("\n", "\\n").replace("\t", "\\t").replace("\r", "\\r") + '"'


def _token_item(text: str) -> str:
    if not text or any(c in text for c in ',()"') or text != text.strip():
        return _quote(text)
    return text


@dataclass
class Row:
    entity: str
    relation: str
    value: str
    records: List[str]
    iterations: List[int]
    probabilities: List[str]
    promotion_iteration: int
    promotion_probability: str
    entity_labels: List[str]
    value_labels: List[str]
    entity_categories: List[str]
    value_categories: List[str]

    def line(self, kind: BeliefKind) -> str:
        d = FIXTURE_DIALECT
        if kind is BeliefKind.PROMOTED:
            f4, f5 = str(self.promotion_iteration), self.promotion_probability
        else:
            f4 = "[" + ",".join(str(i) for i in self.iterations) + "]"
            f5 = "[" + ",".join(self.probabilities) + "]"
        summary = "+".join(sorted({r.split(",", 1)[0].lstrip("[") for r in self.records})) or "none"
        fields = [
            self.entity,
            self.relation,
            self.value,
            f4,
            f5,
            summary,
            d.join_labels(self.entity_labels) if self.entity_labels else "",
            d.join_labels(self.value_labels) if self.value_labels else "",
            self.entity_labels[0] if self.entity_labels else "",
            self.value_labels[0] if self.value_labels else "",
            d.category_separator.join(self.entity_categories),
            d.category_separator.join(self.value_categories),
            "[" + ",".join(self.records) + "]",
        ]
        return "\t".join(fields)


@dataclass
class Manifest:
    """What the generator put in a file, for tests to check against."""

    rows: int = 0
    below_threshold: int = 0
    records_by_component: Dict[str, int] = field(default_factory=lambda: {c.value: 0 for c in ComponentId})
    aliases: Dict[str, int] = field(default_factory=dict)


class FixtureGenerator:
    def __init__(self, seed: int = 0, below_threshold_rate: float = 0.05, max_records: int = 3):
        self.rng = random.Random(seed)
        self.below_threshold_rate = below_threshold_rate
        self.max_records = max_records

    def _name(self, cat: str) -> str:
        return self.rng.choice(NAMES.get(cat, ["thing"]))

    def _time(self) -> str:
        r = self.rng
        stamp = f"20{r.randint(9, 17):02d}-{r.randint(1, 12):02d}-{r.randint(1, 28):02d}T{r.randint(0, 23):02d}:{r.randint(0, 59):02d}:{r.randint(0, 59):02d}"
        roll = r.random()
        if roll < 0.1:
            return stamp + "+02:00"
        if roll < 0.2:
            return stamp + ".25Z"
        return stamp + "Z"

    def _payload(self, comp: ComponentId, entity_name: str, value_name: str, relation: str) -> str:
        r = self.rng
        if comp is ComponentId.AliasMatcher:
            return _source([[f"20{r.randint(0, 12):02d}-{r.randint(1, 12):02d}-{r.randint(1, 28):02d}"]])
        if comp is ComponentId.CMC:
            return _source([["suffix", entity_name[-3:], f"0.{r.randint(10, 99)}"], ["prefix", entity_name[:2], "0.5"]][: r.randint(1, 2)])
        if comp is ComponentId.CPL:
            pats = [["arg1 is located in arg2", str(r.randint(1, 50))], ["arg1's capital; arg2", str(r.randint(1, 9))], ["arg2 | arg1", "1"]]
            return _source(pats[: r.randint(1, 3)])
        if comp is ComponentId.KbManipulation:
            return _source([[r.choice(["inverted relation bug", "duplicate entity: fixed"])]])
        if comp is ComponentId.LatLong:
            return _source([[entity_name.title(), f"{r.uniform(-90, 90):.4f}", f"{r.uniform(-180, 180):.4f}"]])
        if comp is ComponentId.LE:
            return ""
        if comp is ComponentId.MBL:
            items = [f"concept:city:{entity_name}", "concept:city", f"concept:{relation}", f"concept:country:{value_name}", "concept:country"]
            return _source([items[: r.randint(2, 5)]])
        if comp is ComponentId.OE:
            return _source([[f"{entity_name.title()} is in {value_name.title()}.\tMore text.", f"http://example.org/page/{r.randint(1, 999)}"]])
        if comp is ComponentId.OntologyModifier:
            return _source([[r.choice(["category", "relation"]), f"added {relation}"]])
        if comp is ComponentId.PRA:
            paths = [
                ["forward", f"0.{r.randint(1, 99)}", "concept:cityliesonriver", "concept:riverflowsthroughcountry"],
                ["backward", "0.2", "concept:countrycapital"],
            ]
            return _source(paths[: r.randint(1, 2)])
        if comp is ComponentId.RL:
            return _source(
                [
                    ["scores", f"0.{r.randint(10, 99)}", str(r.randint(0, 40)), str(r.randint(0, 5)), str(r.randint(0, 9))],
                    ["var", "X", f"concept:city:{entity_name}"],
                    ["pred", "citylocatedinstate", "X", "Y"],
                    ["pred", "statelocatedincountry", "Y", "Z"],
                ]
            )
        if comp is ComponentId.SEAL:
            return _source([[f"http://example.org/list?page={r.randint(1, 99)}&q=x"]])
        if comp is ComponentId.Semparse:
            return _source([[f'{entity_name.title()}, near "{value_name}" \\ ok']])
        if comp is ComponentId.SpreadsheetEdits:
            return _source([["alice", f"concept:city:{entity_name}", relation, f"concept:country:{value_name}", "add", "edits-2010.xls"]])
        raise ValueError(comp)  # pragma: no cover

    def _record(self, comp: ComponentId, name: str, entity: str, value: str, relation: str, it: int, prob: str) -> str:
        ename = entity.rsplit(":", 1)[-1]
        vname = value.rsplit(":", 1)[-1]
        if comp is ComponentId.LatLong:
            token = f"({_token_item(entity)},{self.rng.uniform(-90, 90):.3f},{self.rng.uniform(-180, 180):.3f})"
        else:
            token = f"({_token_item(entity)},{_token_item(value)})"
        source = self._payload(comp, ename, vname, relation.rsplit(":", 1)[-1])
        return f"{name},iteration={it},prob={prob},time={self._time()},token={token},source={_quote(source)}"

    def row(self, i: int, prefix: str, manifest: Optional[Manifest] = None) -> Row:
        r = self.rng
        roll = r.random()
        if roll < 0.1:
            cat = r.choice(CATEGORIES[:6])
            relation, dom, rng_cat = "concept:generalizations", cat, None
            value = f"concept:{cat}"
        else:
            rel = r.choice(list(RELATIONS))
            relation = f"concept:{rel}"
            dom, rng_cat = RELATIONS[rel]
            if rng_cat == "xsd:string":
                value = f"http://example.org/{r.choice(['a', 'b', 'c'])}/{r.randint(0, 99)}"
            elif rng_cat == "xsd:integer":
                value = str(r.randint(1000, 9_000_000))
            else:
                value = f"concept:{rng_cat}:{self._name(rng_cat).replace(' ', '_')}"
        ename = self._name(dom)
        entity = f"concept:{dom}:{ename}_{prefix}{i}"
        n = r.randint(1, self.max_records)
        comps = [COMPONENTS[(i + k) % len(COMPONENTS)] if k == 0 else r.choice(COMPONENTS) for k in range(n)]
        iterations = [r.randint(1, 1100) for _ in comps]
        probabilities = [f"0.{r.randint(10, 99)}" for _ in comps]
        records = []
        for comp, it, prob in zip(comps, iterations, probabilities):
            name = comp.value
            if comp in ALIASES and r.random() < 0.15:
                name = r.choice(ALIASES[comp])
                if manifest is not None:
                    manifest.aliases[name] = manifest.aliases.get(name, 0) + 1
            if manifest is not None:
                manifest.records_by_component[comp.value] += 1
            records.append(self._record(comp, name, entity, value, relation, it, prob))
        below = r.random() < self.below_threshold_rate
        promotion_probability = f"0.{r.randint(50, 89)}" if below else r.choice(["0.9", "0.93", "0.9375", "1.0", "0.99"])
        literal_value = rng_cat is not None and rng_cat.startswith("xsd:")
        value_cats = [f"concept:{rng_cat}"] if rng_cat is not None and not literal_value else []
        return Row(
            entity=entity,
            relation=relation,
            value=value,
            records=records,
            iterations=iterations,
            probabilities=probabilities,
            promotion_iteration=r.randint(1, 1100),
            promotion_probability=promotion_probability,
            entity_labels=r.choice(LABEL_VARIANTS)(ename),
            value_labels=[] if literal_value or rng_cat is None else r.choice(LABEL_VARIANTS)(value.rsplit(":", 1)[-1]),
            entity_categories=[f"concept:{dom}"] + ([f"concept:{GENERALIZATION_OF[dom]}"] if r.random() < 0.3 else []),
            value_categories=value_cats,
        )

    def lines(self, n: int, kind: BeliefKind, manifest: Optional[Manifest] = None) -> Iterator[str]:
        prefix = "p" if kind is BeliefKind.PROMOTED else "c"
        for i in range(n):
            row = self.row(i, prefix, manifest)
            if manifest is not None:
                manifest.rows += 1
                if kind is BeliefKind.PROMOTED and float(row.promotion_probability) < 0.9:
                    manifest.below_threshold += 1
            yield row.line(kind)


def write_beliefs(path: Path, n: int, kind: BeliefKind, seed: int = 0, **kwargs) -> Manifest:
    manifest = Manifest()
    gen = FixtureGenerator(seed, **kwargs)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(HEADER + "\n")
        batch = []
        for line in gen.lines(n, kind, manifest):
            batch.append(line)
            if len(batch) >= 10_000:
                fh.write("\n".join(batch) + "\n")
                batch = []
        if batch:
            fh.write("\n".join(batch) + "\n")
    return manifest


def write_ontology(path: Path) -> int:
    rows = ontology_rows()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")
    return len(rows)


def write_fixtures(out: Path, beliefs: int, seed: int = 0, candidates: Optional[int] = None) -> Dict[str, object]:
    """Write ontology, promoted and candidate files plus a JSON manifest."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    n_candidates = beliefs if candidates is None else candidates
    info: Dict[str, object] = {"seed": seed, "ontology_rows": write_ontology(out / "ontology.tsv")}
    info["promoted"] = write_beliefs(out / "promoted.tsv", beliefs, BeliefKind.PROMOTED, seed).__dict__
    info["candidates"] = write_beliefs(out / "candidates.tsv", n_candidates, BeliefKind.CANDIDATE, seed + 1).__dict__
    (out / "manifest.json").write_text(json.dumps(info, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    return info
