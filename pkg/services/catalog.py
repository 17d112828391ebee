"""
Append-only JSON-lines catalog of search results, keyed by canonical expression.
"""

import json
from pathlib import Path
from typing import Dict, Iterator, List, Set, Union

import pandas as pd
from filelock import FileLock

from models.data_models import CatalogRecord
from utils.i18n import _
from utils.vcs_logger import logger

LOCK_TIMEOUT = 30


class ResultsCatalog:
    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.lock = FileLock(str(self.path.with_suffix(self.path.suffix + ".lock")), timeout=LOCK_TIMEOUT)

    def iter_records(self) -> Iterator[CatalogRecord]:
        if not self.path.exists():
            return
        with self.path.open("r", encoding="utf-8") as handle:
            for line_num, line in enumerate(handle, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield CatalogRecord.from_dict(json.loads(line))
                except json.JSONDecodeError as e:
                    # a torn final line from an interrupted run is dropped
                    logger.warning(_("Skipping malformed catalog line {}: {}").format(line_num, e))

    def records(self) -> List[CatalogRecord]:
        return list(self.iter_records())

    def completed_exprs(self) -> Set[str]:
        return {record.expr for record in self.iter_records()}

    def append(self, record: CatalogRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.lock, self.path.open("a", encoding="utf-8") as handle:
            handle.write(record.to_json_line())
            handle.write("\n")

    def summary(self) -> Dict[str, Dict[str, int]]:
        """Record counts by status, by case label, and of findings."""
        if not self.path.exists() or self.path.stat().st_size == 0:
            return {"status": {}, "case_label": {}, "finding": {}}
        frame = pd.read_json(self.path, lines=True)
        return {
            "status": {str(k): int(v) for k, v in frame["status"].value_counts().sort_index().items()},
            "case_label": {
                str(k): int(v)
                for k, v in frame["case_label"].dropna().value_counts().sort_index().items()
            },
            "finding": {"total": int(frame["finding"].sum())},
        }
