#!/usr/bin/env python3
"""Regenerate the pinned regression artifacts under tests/data/.

The pins freeze machine-computed results: the example-verification ledger,
per-row cross-check summaries over n = 2..12, and the witness-search outputs
for the unanswered table cells.  Tests compare fresh runs against these files;
any drift is a regression (or a deliberate catalog change, in which case this
script is rerun and the diff reviewed).
"""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from linquas import __version__, engine
from linquas.catalog import ModulusKind, get_entry

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

CROSSCHECK_RANGE = list(range(2, 13))
SEARCH_MAX_ANY = 12
SEARCH_MAX_PRIME = 13
SEARCHED_CELLS = [
    ("stein_third", 14, 0),
    ("stein_third", 14, 1),
    ("schroder_second", 13, 1),
    ("schroder_second", 13, 2),
    ("schroder_second", 13, 3),
    ("lip", 43, 0),
    ("lip", 43, 1),
    ("rip", 44, 0),
    ("rip", 44, 1),
]


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def regen_example_findings() -> dict:
    ledger = engine.verify_examples()
    return {
        "tool_version": __version__,
        "findings": [f.to_dict() for f in ledger.findings],
    }


def regen_crosscheck_pins(workers: int) -> dict:
    reports = engine.crosscheck_all(CROSSCHECK_RANGE, workers=workers)
    rows = []
    for report in reports:
        mismatches = [m.to_list() for m in report.mismatches]
        rows.append({
            "entry": report.entry_id,
            "table": report.table_number,
            "variant": report.variant,
            "row": report.row_label,
            "n_values": report.n_values,
            "checked": report.checked,
            "na_excluded": report.na_excluded,
            "mismatch_count": len(mismatches),
            "first_mismatches": mismatches[:5],
            "mismatch_digest": _digest(mismatches),
        })
    return {"tool_version": __version__, "n_range": CROSSCHECK_RANGE, "rows": rows}


def regen_witness_pins() -> dict:
    cells = []
    for entry_id, table, variant in SEARCHED_CELLS:
        entry = get_entry(entry_id)
        row = next(r for r in entry.rows
                   if r.table_number == table and r.variant == variant)
        hi = (SEARCH_MAX_PRIME if row.modulus_kind is ModulusKind.PRIME_P
              else SEARCH_MAX_ANY)
        witnesses = engine.search_witnesses(entry, row, list(range(2, hi + 1)), limit=1)
        first = witnesses[0] if witnesses else None
        cells.append({
            "entry": entry_id,
            "table": table,
            "variant": variant,
            "row": row.label(),
            "n_max": hi,
            "witness": [first.n, first.a, first.b, first.c] if first else None,
            "certified_empty": not witnesses,
        })
    return {"tool_version": __version__, "cells": cells}


def main() -> int:
    workers = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    outputs = {
        "example_findings.json": regen_example_findings(),
        "crosscheck_pins.json": regen_crosscheck_pins(workers),
        "witness_pins.json": regen_witness_pins(),
    }
    for name, payload in outputs.items():
        path = DATA_DIR / name
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
