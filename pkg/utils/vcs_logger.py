"""
Run-file logger for the vanishing class size engine.

Every CLI invocation and every search grid point gets its own log file under
the configured log directory. Records are echoed to stderr so stdout stays
free for the JSON report. Worker threads bind themselves to a run with
``run_logging`` and plain ``logger.info(...)`` calls follow the binding.
"""

import logging
import re
import sys
import threading
from contextlib import contextmanager
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, Iterator, Optional, Union

from core.consts import TOOL_NAME, Directories, FileExtensions
from utils.i18n import _

try:
    import pytz
except ImportError:
    pytz = None

LOG_FORMAT = "%(asctime)s %(name)s [%(threadName)s] %(levelname)s: %(message)s"
MAX_LOG_BYTES = 5 * 1024 * 1024


class TZFormatter(logging.Formatter):
    """Formats record times in the configured timezone (local time without pytz)."""

    def __init__(self, fmt: str, timezone=None):
        super().__init__(fmt, "%Y-%m-%d %H:%M:%S")
        self.timezone = timezone

    def formatTime(self, record, datefmt: Optional[str] = None) -> str:
        stamp = datetime.fromtimestamp(record.created, self.timezone)
        return stamp.strftime(datefmt or self.datefmt)


def _resolve_timezone(name: Optional[str]):
    if pytz is None or not name:
        return None
    try:
        return pytz.timezone(name)
    except pytz.UnknownTimeZoneError:
        print(f"Unknown timezone: {name}. Falling back to UTC.", file=sys.stderr)
        return pytz.UTC


def run_slug(run_name: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9_.+-]+", "_", run_name).strip("_")
    return slug[:60] or "run"


class RunFileLogger(logging.Logger):
    """Logger that routes each record to the file of the run bound to its thread."""

    def __init__(self, name: str, log_dir: Union[str, Path] = Directories.LOGS, level: int = logging.INFO):
        super().__init__(name, level)
        self.log_dir = Path(log_dir)
        self.formatter = TZFormatter(LOG_FORMAT, _resolve_timezone("UTC"))
        self._runs: Dict[str, RotatingFileHandler] = {}
        self._lock = threading.Lock()
        self._bound = threading.local()

    def configure(self, log_dir: Union[str, Path], level: Union[str, int], timezone: Optional[str]) -> None:
        self.log_dir = Path(log_dir)
        self.setLevel(logging.getLevelName(level) if isinstance(level, str) else level)
        self.formatter = TZFormatter(LOG_FORMAT, _resolve_timezone(timezone))
        with self._lock:
            for handler in self._runs.values():
                handler.setFormatter(self.formatter)

    def current_run(self) -> Optional[str]:
        return getattr(self._bound, "run", None)

    def bind_thread(self, run_name: Optional[str]) -> None:
        self._bound.run = run_name

    def open_run(self, run_name: str) -> Path:
        """Create the run's log file and write its banner; returns the file path."""
        stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        path = self.log_dir / f"{stamp}_{run_slug(run_name)}{FileExtensions.LOG}"
        with self._lock:
            if run_name not in self._runs:
                self.log_dir.mkdir(parents=True, exist_ok=True)
                handler = RotatingFileHandler(path, maxBytes=MAX_LOG_BYTES, backupCount=3, encoding="utf-8")
                handler.setFormatter(self.formatter)
                self._runs[run_name] = handler
            path = Path(self._runs[run_name].baseFilename)
        self.info("-" * 72, run=run_name)
        self.info(_("Vanishing class size engine - Run Log"), run=run_name)
        self.info(_("Run: {}").format(run_name), run=run_name)
        return path

    def close_run(self, run_name: str) -> None:
        with self._lock:
            handler = self._runs.pop(run_name, None)
        if handler is not None:
            handler.close()

    def _emit(self, level: int, msg: str, run: Optional[str], args) -> None:
        if not self.isEnabledFor(level):
            return
        record = self.makeRecord(self.name, level, "", 0, msg, args, None)
        run = run or self.current_run()
        with self._lock:
            handler = self._runs.get(run) if run else None
        if handler is not None:
            handler.emit(record)
        text = self.formatter.format(record)
        try:
            print(text, file=sys.stderr)
        except UnicodeEncodeError:
            sys.stderr.buffer.write((text + "\n").encode("utf-8", errors="replace"))

    def debug(self, msg, *args, run: Optional[str] = None, **kwargs) -> None:
        self._emit(logging.DEBUG, msg, run, args)

    def info(self, msg, *args, run: Optional[str] = None, **kwargs) -> None:
        self._emit(logging.INFO, msg, run, args)

    def warning(self, msg, *args, run: Optional[str] = None, **kwargs) -> None:
        self._emit(logging.WARNING, msg, run, args)

    def error(self, msg, *args, run: Optional[str] = None, **kwargs) -> None:
        self._emit(logging.ERROR, msg, run, args)


logger = RunFileLogger(TOOL_NAME)


@contextmanager
def run_logging(run_name: str) -> Iterator[Path]:
    """Bind the calling thread to a fresh log file for run_name."""
    path = logger.open_run(run_name)
    previous = logger.current_run()
    logger.bind_thread(run_name)
    try:
        yield path
    finally:
        logger.bind_thread(previous)
        logger.close_run(run_name)
