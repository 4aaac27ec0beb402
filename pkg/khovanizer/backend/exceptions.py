from __future__ import annotations


class KhovanizerError(Exception):
    """Base class for every domain error raised by the backend."""


__all__ = ["KhovanizerError"]
