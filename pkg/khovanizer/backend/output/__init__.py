from .factory import OutputFactory
from .formatters import OutputError
from .schemas import SCHEMAS, validate_document

__all__ = ["OutputFactory", "OutputError", "SCHEMAS", "validate_document"]
