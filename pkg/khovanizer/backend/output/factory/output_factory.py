from typing import Any, Callable, Dict, List, Optional

from ..formatters.json.json_output import output_to_json
from ..formatters.text.text_output import output_to_text
from ..formatters.yaml.yaml_output import output_to_yaml

Writer = Callable[..., None]


class OutputFactory:
    """Maps an output format name to a writer ``(document, output_file) -> None``."""

    _pretty_print_formats = {"json"}

    _output_methods: Dict[str, Callable[..., None]] = {
        "json": output_to_json,
        "yaml": output_to_yaml,
        "text": output_to_text,
    }

    @classmethod
    def formats(cls) -> List[str]:
        return sorted(cls._output_methods)

    @classmethod
    def get_output(cls, format: str, config: Optional[Dict[str, Any]] = None) -> Writer:
        try:
            method = cls._output_methods[format]
        except KeyError:
            raise ValueError(
                f"Unknown output format: {format}. Available formats are: {', '.join(cls.formats())}."
            ) from None
        format_config = {} if config is None else dict(config)
        format_config.pop("format", None)
        if format not in cls._pretty_print_formats:
            format_config.pop("pretty_print", None)
        return lambda data, output_file=None: method(data, output_file, format_config)
