"""Cooperative cancellation for long computations.

Assembly checks a token between crossing attachments and the self-test
runner checks it between tasks. A ``CancellationTokenSource`` owns the
event; the ``CancellationToken`` it hands out can only observe it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from ...exceptions import KhovanizerError


class OperationCancelledError(KhovanizerError):
    """Raised at the next checkpoint after cancellation was requested."""

    def __init__(self, where: Optional[str] = None) -> None:
        self.where = where
        super().__init__(f"Cancelled during {where}" if where else "Cancelled")


@dataclass(frozen=True)
class CancellationToken:
    _event: threading.Event

    def is_cancellation_requested(self) -> bool:
        return self._event.is_set()

    def wait(self, timeout: Optional[float] = None) -> bool:
        return self._event.wait(timeout)

    def throw_if_cancellation_requested(self, where: Optional[str] = None) -> None:
        if self._event.is_set():
            raise OperationCancelledError(where)


class CancellationTokenSource:
    def __init__(self) -> None:
        self._event = threading.Event()
        self._token = CancellationToken(self._event)

    @property
    def token(self) -> CancellationToken:
        return self._token

    def cancel(self) -> None:
        self._event.set()

    def is_cancelled(self) -> bool:
        return self._event.is_set()


__all__ = ["CancellationToken", "CancellationTokenSource", "OperationCancelledError"]
