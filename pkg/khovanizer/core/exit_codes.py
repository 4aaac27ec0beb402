from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit status of every command."""

    OK = 0
    INPUT_ERROR = 1
    ORACLE_MISMATCH = 2
    PROPERTY_VIOLATED = 3


__all__ = ["ExitCode"]
