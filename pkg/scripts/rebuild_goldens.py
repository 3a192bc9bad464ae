#!/usr/bin/env python3
"""Rewrite tests/golden/*.json from the hand-transcribed oracle tables.

The goldens are committed artifacts; this script exists so their provenance
stays reproducible.  It serializes with plain json calls on the data in
tests/oracle_tables.py and deliberately imports nothing from the package,
so the files stay independent of the code they test.
"""

import json
import sys
from pathlib import Path

TESTS = Path(__file__).resolve().parent.parent / "tests"
sys.path.insert(0, str(TESTS))

import oracle_tables  # noqa: E402

TAG_ORDER = ["Y", "Z:1", "Z:2", "U", "Uc", "Xlim", "Total", "Supported"]


def table_obj(tag, n, m, entries):
    obj = {"space": tag, "n": n}
    if m is not None:
        obj["m"] = m
    obj["entries"] = [
        {"k": k, "l": l, "q": q, "p": p, "dim": dim}
        for (k, l, q, p), dim in sorted(entries.items())
    ]
    return obj


def main():
    golden = TESTS / "golden"
    golden.mkdir(exist_ok=True)
    for spec, fname, tables in oracle_tables.GOLDEN:
        obj = {
            "family": spec,
            "tables": [table_obj(tag, *tables[tag])
                       for tag in TAG_ORDER if tag in tables],
        }
        path = golden / fname
        path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        print("wrote", path.relative_to(TESTS.parent))


if __name__ == "__main__":
    main()
