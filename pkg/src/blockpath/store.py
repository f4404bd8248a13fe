"""Append-only JSONL store of campaign reports, keyed by campaign hash."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import StoreError
from .harness import SCHEMA_VERSION, ScanReport

log = logging.getLogger(__name__)


@dataclass
class QueryResult:
    reports: list = field(default_factory=list)
    corrupt: list = field(default_factory=list)  # (line number, reason)


def _scan(path: Path) -> QueryResult:
    out = QueryResult()
    if not path.exists():
        return out
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as err:
        raise StoreError(f"cannot read {path}: {err}") from err
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as err:
            out.corrupt.append((lineno, f"invalid JSON: {err.msg}"))
            continue
        if not isinstance(obj, dict) or obj.get("v") != SCHEMA_VERSION or "hash" not in obj:
            out.corrupt.append((lineno, "not a version-1 report record"))
            continue
        out.reports.append(obj)
    for lineno, reason in out.corrupt:
        log.warning("%s:%d: skipped corrupt line (%s)", path, lineno, reason)
    return out


def store_append(path, report: ScanReport, force: bool = False) -> bool:
    """Append ``report``; a report whose campaign hash is already stored is
    not written again (returns False) unless ``force`` is set."""
    path = Path(path)
    record = report.to_json()
    if not force and any(r["hash"] == record["hash"] for r in _scan(path).reports):
        return False
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
    except OSError as err:
        raise StoreError(f"cannot append to {path}: {err}") from err
    return True


def store_query(path, kind: Optional[str] = None, k: Optional[int] = None, n: Optional[int] = None,
                mode: Optional[str] = None, hash: Optional[str] = None) -> QueryResult:
    """Stored reports matching every given filter; ``n`` matches the largest
    order a campaign covered."""
    res = _scan(Path(path))
    want = {"kind": kind, "k": k, "n": n, "mode": mode, "hash": hash}
    res.reports = [r for r in res.reports if all(v is None or r.get(f) == v for f, v in want.items())]
    return res
