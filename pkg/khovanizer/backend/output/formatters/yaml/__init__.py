from .yaml_output import output_to_yaml

__all__ = ["output_to_yaml"]
