from .json_output import output_to_json

__all__ = ["output_to_json"]
