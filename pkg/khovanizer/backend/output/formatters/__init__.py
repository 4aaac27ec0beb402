from .base import OutputError, write_atomic

__all__ = ["OutputError", "write_atomic"]
