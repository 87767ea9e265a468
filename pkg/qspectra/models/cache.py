"""
Spectral cache.

A JSON-lines file of previously analysed graphs keyed by the graph6 of their
canonical form. Each line holds the exact characteristic polynomial of Q and
the SLEE value, so reruns of a search skip graphs already seen.
"""

import json
import logging
import os
from typing import List

from pydantic import BaseModel, ValidationError

from qspectra.schemas.common import JsonInt

logger = logging.getLogger(__name__)


class CacheRecord(BaseModel):
    """One cached analysis."""
    graph6: str
    char_poly: List[JsonInt]
    slee: float


class SpectralCache:
    """
    Look up a cached analysis, otherwise compute it and store it.

    Records are appended and flushed one by one; a missing file is an empty
    cache and malformed lines are skipped.
    """

    def __init__(self, path):
        self.path = path
        self.records = {}
        self.load()

    def load(self):
        self.records = {}
        if not os.path.exists(self.path):
            logger.info(f"Spectral cache {self.path} not found, starting empty")
            return

        with open(self.path, encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = CacheRecord.model_validate(json.loads(line))
                except (json.JSONDecodeError, ValidationError) as e:
                    logger.warning(f"Skipping malformed cache line {number} in {self.path}: {str(e)}")
                    continue
                self.records[record.graph6] = record
        logger.info(f"Loaded {len(self.records)} cached analyses from {self.path}")

    def __len__(self):
        return len(self.records)

    def __contains__(self, key):
        return key in self.records

    def get(self, key):
        return self.records.get(key)

    def put(self, record):
        if record.graph6 in self.records:
            return
        self.records[record.graph6] = record
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(record.model_dump_json() + "\n")
            handle.flush()
