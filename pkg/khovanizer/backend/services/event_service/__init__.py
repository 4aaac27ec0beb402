from .cancellation import (
    CancellationToken,
    CancellationTokenSource,
    OperationCancelledError,
)

__all__ = [
    'CancellationToken',
    'CancellationTokenSource',
    'OperationCancelledError',
]
