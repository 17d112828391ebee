"""
gettext translations for log and help messages (en, zh, ja).
Catalogs live in locale/<language>/LC_MESSAGES/vcs_engine.mo; English is the
source language and a missing catalog falls back to it.
"""

import gettext
import sys
from pathlib import Path
from typing import Optional

from core.consts import Directories, Languages

DOMAIN = "vcs_engine"
PROJECT_DIR = Path(__file__).resolve().parent.parent


class LanguageManager:
    def __init__(self, base_dir: Optional[Path] = None, language: Optional[str] = None):
        self.locale_dir = (base_dir or PROJECT_DIR) / Directories.LOCALE
        self.language = Languages.DEFAULT
        self.translations: gettext.NullTranslations = gettext.NullTranslations()
        self.use(language or Languages.DEFAULT)

    def use(self, language: str) -> bool:
        """Switch catalogs; False when the language fell back to English."""
        if language not in Languages.SUPPORTED:
            print(
                f"Warning: unsupported language '{language}', using '{Languages.DEFAULT}'.",
                file=sys.stderr,
            )
            language = Languages.DEFAULT
        self.language = language
        self.translations = gettext.translation(
            DOMAIN, localedir=str(self.locale_dir), languages=[language], fallback=True
        )
        return language == Languages.EN or type(self.translations) is not gettext.NullTranslations


_language_manager: Optional[LanguageManager] = None


def get_language_manager() -> LanguageManager:
    global _language_manager
    if _language_manager is None:
        _language_manager = LanguageManager()
    return _language_manager


def _(message: str) -> str:
    """Translate a message; format afterwards: _("Order: {}").format(order)."""
    return get_language_manager().translations.gettext(message)


def initialize_i18n(language: Optional[str] = None, base_dir: Optional[Path] = None) -> None:
    global _language_manager
    _language_manager = LanguageManager(base_dir, language)
