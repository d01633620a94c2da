"""Append-only newline-delimited JSON cache of computed ex(n, K_s, kH) values."""

import json
import logging
import os
import threading
from typing import List, Literal, Optional

from pydantic import BaseModel, ValidationError

from scripts import __version__
from scripts.errors import ArgumentError

logger = logging.getLogger(__name__)

Method = Literal["enumeration", "formula", "construction"]


class CacheRecord(BaseModel):
    n: int
    k: int
    s: int
    pattern: str
    value: int
    witnesses: List[str] = []
    method: Method
    tool_version: str = __version__


class ResultCache:
    """Records are never rewritten; the newest matching line wins on lookup."""

    def __init__(self, path: str):
        self.path = path
        self.corrupt_lines = 0
        self._lock = threading.Lock()

    def _records(self) -> List[CacheRecord]:
        self.corrupt_lines = 0
        if not os.path.exists(self.path):
            return []
        records = []
        with open(self.path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    records.append(CacheRecord.model_validate(json.loads(line)))
                except (json.JSONDecodeError, ValidationError) as e:
                    self.corrupt_lines += 1
                    logger.warning(f"Skipping corrupt cache line {lineno} in {self.path}: {e}")
        return records

    def get(
        self,
        n: int,
        k: int,
        s: int,
        pattern: str,
        method: Optional[Method] = None,
    ) -> Optional[CacheRecord]:
        found = None
        for record in self._records():
            if (record.n, record.k, record.s, record.pattern) != (n, k, s, pattern):
                continue
            if method is not None and record.method != method:
                continue
            if record.tool_version != __version__:
                logger.debug(f"Ignoring cache record from tool version {record.tool_version}")
                continue
            found = record
        return found

    def put(self, record: CacheRecord) -> None:
        line = record.model_dump_json() + "\n"
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(line)

    def rederive(self, record: CacheRecord) -> bool:
        """Recompute the record's value by its own method and compare."""
        return rederive_value(record) == record.value


def rederive_value(record: CacheRecord) -> int:
    from scripts.constructions import construction_counts
    from scripts.formulas import conjecture_value
    from scripts.packing import pattern_from_graph6
    from scripts.search import exact_ex

    h = pattern_from_graph6(record.pattern)
    if record.method == "enumeration":
        return exact_ex(record.n, record.s, record.k, h).value
    if not h.is_p3():
        raise ArgumentError(f"{record.method} records exist only for the P3 pattern")
    if record.method == "formula":
        return conjecture_value(record.n, record.k, record.s)
    return max(construction_counts(record.n, record.k, record.s).values())
