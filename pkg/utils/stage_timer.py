"""
Per-stage timing and session summaries
"""

import json
import threading
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

from core.consts import FileExtensions

# Thread-local storage for the expression a worker is analyzing
_thread_local = threading.local()


@dataclass
class StageUsage:
    calls: int = 0
    total_ms: int = 0
    stages: Dict[str, int] = field(default_factory=dict)

    def add(self, stage: str, elapsed_ms: int) -> None:
        self.calls += 1
        self.total_ms += elapsed_ms
        self.stages[stage] = self.stages.get(stage, 0) + elapsed_ms


class StageTimer:
    def __init__(self, session_dir: Optional[Path] = None):
        self.session_dir = session_dir
        self._lock = threading.Lock()

        self.usage = StageUsage()
        self.expr_usage: Dict[str, StageUsage] = {}

    def set_current_expr(self, expr: Optional[str]) -> None:
        """Set the expression whose stages this thread is timing."""
        _thread_local.current_expr = expr
        if expr is None:
            return
        with self._lock:
            self.expr_usage.setdefault(expr, StageUsage())

    def get_current_expr(self) -> Optional[str]:
        return getattr(_thread_local, "current_expr", None)

    def record(self, stage: str, elapsed_ms: int) -> None:
        with self._lock:
            self.usage.add(stage, elapsed_ms)
            current = self.get_current_expr()
            if current and current in self.expr_usage:
                self.expr_usage[current].add(stage, elapsed_ms)

    @contextmanager
    def stage(self, name: str, sink: Optional[Dict[str, int]] = None) -> Iterator[None]:
        """Time a block; the milliseconds also land in sink when given."""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed_ms = int(round((time.perf_counter() - start) * 1000))
            self.record(name, elapsed_ms)
            if sink is not None:
                sink[name] = sink.get(name, 0) + elapsed_ms

    def get_usage(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "usage": asdict(self.usage),
                "expr_usage": {k: asdict(v) for k, v in self.expr_usage.items()},
                "timestamp": datetime.now().isoformat(),
            }

    def save_session(self, additional_info: Optional[Dict[str, Any]] = None) -> Optional[Path]:
        if self.session_dir is None:
            return None
        data = self.get_usage()
        if additional_info:
            data.update(additional_info)

        self.session_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        session_file = self.session_dir / f"session_{timestamp}{FileExtensions.JSON}"
        with open(session_file, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False)

        return session_file


_timer: Optional[StageTimer] = None


def initialize_stage_timer(session_dir: Optional[Path] = None) -> StageTimer:
    global _timer
    _timer = StageTimer(session_dir)
    return _timer


def get_stage_timer() -> StageTimer:
    global _timer
    if _timer is None:
        _timer = StageTimer()
    return _timer


def set_current_expr(expr: Optional[str]) -> None:
    get_stage_timer().set_current_expr(expr)


def save_session(additional_info: Optional[Dict[str, Any]] = None) -> Optional[Path]:
    if _timer:
        return _timer.save_session(additional_info)
    return None
