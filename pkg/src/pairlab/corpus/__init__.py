"""Golden example corpus: data rows replayed through the op registry.

Rows live in the JSON files next to this module (override the location
with the PAIRLAB_CORPUS_DIR environment variable). Each row is

    {"name": ..., "op": ..., "args": {...}, "expect": {...}}

and verification replays the op and compares documents exactly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import DomainError
from ..ops import dispatch


@dataclass(frozen=True)
class RowResult:
    name: str
    ok: bool
    expect: object
    got: object


def _row_files():
    override = os.environ.get("PAIRLAB_CORPUS_DIR")
    if override:
        root = Path(override)
        if not root.is_dir():
            raise DomainError(f"PAIRLAB_CORPUS_DIR is not a directory: {override}")
        return sorted(root.glob("*.json"))
    root = resources.files(__package__)
    return sorted(
        (p for p in root.iterdir() if p.name.endswith(".json")), key=lambda p: p.name
    )


def load_rows() -> list:
    rows = []
    for path in _row_files():
        with path.open("r", encoding="utf-8") as handle:
            doc = json.load(handle)
        for row in doc["rows"]:
            for field in ("name", "op", "args", "expect"):
                if field not in row:
                    raise DomainError(f"corpus row missing {field!r} in {path}")
            rows.append(row)
    names = [r["name"] for r in rows]
    if len(set(names)) != len(names):
        raise DomainError("duplicate corpus row names")
    return rows


def _canon(doc) -> str:
    return json.dumps(doc, sort_keys=True)


def run_row(row) -> RowResult:
    got = dispatch(row["op"], row["args"])
    return RowResult(
        name=row["name"],
        ok=_canon(got) == _canon(row["expect"]),
        expect=row["expect"],
        got=got,
    )


def verify() -> list:
    """Replay every row; never raises on mismatch, only reports."""
    return [run_row(row) for row in load_rows()]
