"""Generate the bundled synthetic publication corpus (50 records) and its
schema. Deterministic: rerunning produces byte-identical files."""

from __future__ import annotations

import json
import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "hyperfacet" / "data"

KEYWORDS = [
    "hypergraphs",
    "co-occurrence",
    "faceted search",
    "knowledge discovery",
    "data visualisation",
    "network analysis",
    "metadata",
    "information spaces",
    "graph databases",
    "navigation",
    "indexing",
    "clustering",
]

ORGS = {
    "CERN": "Switzerland",
    "University of Geneva": "Switzerland",
    "Inria": "France",
    "Sorbonne University": "France",
    "MIT": "United States",
    "Stanford University": "United States",
    "University of Tokyo": "Japan",
    "ETH Zurich": "Switzerland",
}

SUBJECTS = [
    "Computer Science",
    "Information Systems",
    "Mathematics",
    "Data Science",
    "Library Science",
]

TITLE_HEADS = ["A study of", "Notes on", "Advances in", "Methods for", "On"]


def main() -> None:
    rng = random.Random(20260214)
    records = []
    for i in range(1, 51):
        ref = f"PUB-{i:04d}"
        orgs = rng.sample(sorted(ORGS), rng.randint(1, 2))
        countries = sorted({ORGS[o] for o in orgs})
        keywords = rng.sample(KEYWORDS, rng.randint(1, 4))
        # every record carries at least one subject so an "any" query over
        # the subject pool matches the whole corpus
        subjects = rng.sample(SUBJECTS, rng.randint(1, 2))
        attrs = {
            "publication_id": [ref],
            "title": [f"{rng.choice(TITLE_HEADS)} {rng.choice(KEYWORDS)}"],
            "subject_category": sorted(subjects),
        }
        # some sparsity: keywords and affiliations occasionally missing
        if rng.random() > 0.08:
            attrs["author_keyword"] = sorted(keywords)
        if rng.random() > 0.06:
            attrs["organisation"] = sorted(orgs)
            attrs["country"] = countries
        records.append({"ref": ref, "attrs": attrs})

    schema = {
        "types": [
            "author_keyword",
            "country",
            "organisation",
            {"name": "publication_id", "label": "publication id"},
            "subject_category",
            "title",
        ],
        "edges": [
            {"id": "e_title", "members": ["publication_id", "title"]},
            {
                "id": "e_affiliation",
                "members": ["publication_id", "organisation", "country"],
            },
            {
                "id": "e_topics",
                "members": ["publication_id", "author_keyword", "subject_category"],
            },
        ],
        "reference_types": ["publication_id"],
    }

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with open(OUT_DIR / "publications.jsonl", "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
    with open(OUT_DIR / "publications_schema.json", "w", encoding="utf-8") as fh:
        json.dump(schema, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(records)} records to {OUT_DIR}")


if __name__ == "__main__":
    main()
