from .output_factory import OutputFactory

__all__ = ["OutputFactory"]
