"""Terminal colouring for logs and result summaries."""

import os
import sys
from functools import lru_cache
from typing import Optional

from colorama import Fore, Style
from colorama import init as colorama_init


class ColorSupport:
    """Decides whether to colour output and applies colorama styles."""

    def __init__(self) -> None:
        self._force_color: Optional[bool] = self._env_preference()
        self._reinit()

    @staticmethod
    def _env_preference() -> Optional[bool]:
        if os.environ.get('NO_COLOR') is not None:
            return False
        if os.environ.get('FORCE_COLOR', '').lower() in ('1', 'true', 'yes'):
            return True
        return None

    def _reinit(self) -> None:
        colorama_init(strip=not self.supports_color(), convert=True, wrap=True, autoreset=True)

    def set_force_color(self, force: Optional[bool]) -> None:
        """``True``/``False`` override detection; ``None`` returns to the environment."""
        if force not in (True, False, None):
            raise ValueError("force must be True, False or None")
        target = self._env_preference() if force is None else force
        if target == self._force_color:
            return
        self._force_color = target
        self.supports_color.cache_clear()
        self._reinit()

    @lru_cache(maxsize=1)
    def supports_color(self) -> bool:
        if self._force_color is not None:
            return self._force_color
        term = os.environ.get('TERM', '').lower()
        if 'dumb' in term:
            return False
        if sys.platform == 'win32':
            return any(key in os.environ for key in ('ANSICON', 'WT_SESSION', 'ConEmuANSI')) or (
                os.environ.get('TERM_PROGRAM', '') == 'vscode'
            )
        if hasattr(sys.stdout, 'isatty') and sys.stdout.isatty():
            return True
        return bool(os.environ.get('COLORTERM')) or term in (
            'xterm-color', 'xterm-256color', 'screen', 'screen-256color'
        )

    def colored(self, text: str, color: Optional[str] = None, bright: bool = False) -> str:
        if not text or not self.supports_color():
            return text
        prefix = (Style.BRIGHT if bright else '') + (color or '')
        return f"{prefix}{text}{Style.RESET_ALL}"

    def error(self, text: str) -> str:
        return self.colored(text, Fore.RED)

    def warning(self, text: str) -> str:
        return self.colored(text, Fore.YELLOW)

    def success(self, text: str) -> str:
        return self.colored(text, Fore.GREEN)

    def info(self, text: str) -> str:
        return self.colored(text, Fore.CYAN)

    def verdict(self, passed: bool, text: str) -> str:
        """Green for a passed check, bright red for a failed one."""
        return self.colored(text, Fore.GREEN) if passed else self.colored(text, Fore.RED, bright=True)


color_support = ColorSupport()
