"""
Configuration management.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import dotenv_values

from core.consts import Directories, FlagKeys, Languages
from core.errors import BadParams

DEFAULT_FLAGS_FILE = "vcs.flags"


class ConfigurationManager:
    """Reads the flags file and applies command-line overrides.

    Precedence: command line > environment (enumeration bound only) > flags file > default.
    """

    def __init__(
        self,
        flags_file: Optional[Union[str, Path]] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ):
        if flags_file is None and Path(DEFAULT_FLAGS_FILE).exists():
            flags_file = DEFAULT_FLAGS_FILE
        self.flags_file = Path(flags_file) if flags_file else None
        if self.flags_file is not None and not self.flags_file.exists():
            raise BadParams(
                f"flags file not found: {self.flags_file}",
                {"flags_file": str(self.flags_file)},
            )
        self._flags: Dict[str, Optional[str]] = (
            dict(dotenv_values(self.flags_file)) if self.flags_file else {}
        )
        self._overrides: Dict[str, Any] = {
            k: v for k, v in (overrides or {}).items() if v is not None
        }

    def _raw(self, key: str) -> Optional[str]:
        if key in self._overrides:
            return str(self._overrides[key])
        if key in FlagKeys.ENVIRONMENT_OVERRIDES and os.getenv(key):
            return os.getenv(key)
        value = self._flags.get(key)
        return value if value not in (None, "") else None

    def _int(self, key: str, default: int, minimum: int = 0) -> int:
        raw = self._raw(key)
        if raw is None:
            return default
        try:
            value = int(raw)
        except ValueError as e:
            raise BadParams(f"{key} must be an integer, got {raw!r}", {"key": key}) from e
        if value < minimum:
            raise BadParams(f"{key} must be >= {minimum}, got {value}", {"key": key})
        return value

    def _str(self, key: str, default: str) -> str:
        raw = self._raw(key)
        return raw if raw is not None else default

    def get_enumeration_config(self) -> Dict[str, Any]:
        return {
            "bound": self._int(FlagKeys.ENUMERATION_BOUND, 200000, minimum=1),
        }

    def get_run_config(self) -> Dict[str, Any]:
        return {
            "seed": self._int(FlagKeys.SEED, 0),
        }

    def get_search_config(self) -> Dict[str, Any]:
        return {
            "max_workers": self._int(FlagKeys.MAX_WORKERS, 4, minimum=1),
            "order_cap": self._int(FlagKeys.ORDER_CAP, 200000, minimum=1),
        }

    def get_hall_config(self) -> Dict[str, Any]:
        return {
            "random_rounds": self._int(FlagKeys.HALL_ROUNDS, 1000, minimum=1),
            "max_generators": self._int(FlagKeys.HALL_MAX_GENERATORS, 3, minimum=1),
        }

    def get_log_config(self) -> Dict[str, Any]:
        return {
            "log_dir": self._str(FlagKeys.LOG_DIR, Directories.LOGS),
            "level": self._str(FlagKeys.LOG_LEVEL, "INFO").upper(),
            "timezone": self._str(FlagKeys.TIMEZONE, "UTC"),
        }

    def get_session_config(self) -> Dict[str, Any]:
        return {
            "session_dir": self._str(FlagKeys.SESSION_DIR, Directories.SESSIONS),
        }

    def get_language_config(self) -> Dict[str, Any]:
        language = self._str(FlagKeys.LANGUAGE, Languages.DEFAULT).lower()
        if language not in Languages.SUPPORTED:
            language = Languages.DEFAULT
        return {
            "language": language,
            "supported_languages": Languages.SUPPORTED,
        }
