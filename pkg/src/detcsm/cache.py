"""
Persistent JSON cache of q-polynomials.

One file, keyed by content (kind, n, corank, method, package version).
An unreadable or malformed file is ignored with a warning and replaced on
the next save.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .exactalg import HClass
from .qpoly import MatrixKind, memo_items, memo_put
from .render import coeff_str, parse_coeff

__all__ = ["ResultCache", "ENV_VAR", "record_key"]

log = logging.getLogger(__name__)

ENV_VAR = "DETCSM_CACHE"
FORMAT_VERSION = 1


def record_key(kind, n: int, corank: int, method: str, version: str = __version__) -> str:
    return f"q|{MatrixKind.parse(kind).value}|{n}|{corank}|{method}|{version}"


class ResultCache:
    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.records: dict[str, dict] = {}
        self._dirty = False
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        try:
            data = json.loads(self.path.read_text(encoding="utf-8"))
            if data.get("format") != FORMAT_VERSION or not isinstance(data.get("records"), dict):
                raise ValueError("unexpected layout")
            records = {}
            for key, rec in data["records"].items():
                HClass(int(rec["ambient_dim"]), [parse_coeff(s) for s in rec["payload"]])
                records[key] = rec
        except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
            log.warning("ignoring unreadable cache %s: %s", self.path, exc)
            self._dirty = True
            return
        self.records = records

    def get(self, kind, n: int, corank: int, method: str) -> HClass | None:
        rec = self.records.get(record_key(kind, n, corank, method))
        if rec is None:
            return None
        return HClass(int(rec["ambient_dim"]), [parse_coeff(s) for s in rec["payload"]])

    def put(self, kind, n: int, corank: int, method: str, value: HClass) -> None:
        key = record_key(kind, n, corank, method)
        payload = [coeff_str(c) for c in value.coeffs]
        with self._lock:
            old = self.records.get(key)
            if old is not None and old["payload"] == payload:
                return
            self.records[key] = {
                "kind": MatrixKind.parse(kind).value,
                "n": n,
                "corank": corank,
                "method": method,
                "version": __version__,
                "ambient_dim": value.ambient_dim,
                "payload": payload,
                "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            }
            self._dirty = True

    def preload(self) -> int:
        """Seed the in-process q memo with every record of this version."""
        count = 0
        for rec in self.records.values():
            if rec.get("version") != __version__:
                continue
            value = self.get(rec["kind"], rec["n"], rec["corank"], rec["method"])
            memo_put(rec["kind"], rec["n"], rec["corank"], rec["method"], value)
            count += 1
        return count

    def absorb(self) -> None:
        """Copy every memoised q-polynomial into the cache."""
        for (kind, n, r, method), value in memo_items():
            self.put(kind, n, r, method, value)

    def save(self) -> None:
        with self._lock:
            if not self._dirty:
                return
            self.path.parent.mkdir(parents=True, exist_ok=True)
            body = json.dumps({"format": FORMAT_VERSION, "records": self.records},
                              indent=1, sort_keys=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".detcsm-cache-")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(body)
            os.replace(tmp, self.path)
            self._dirty = False
