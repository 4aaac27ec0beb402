from __future__ import annotations

from typing import Any, Dict, List, Tuple


def _toml_escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace('"', '\\"')


def _format_toml_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return str(value)
    if isinstance(value, str):
        return f'"{_toml_escape(value)}"'
    if isinstance(value, list):
        return "[" + ", ".join(_format_toml_value(v) for v in value) + "]"
    raise TypeError(f"Cannot write {type(value)!r} to TOML")


def _toml_dumps(data: Dict[str, Any]) -> str:
    """Tables after scalars, nested tables as dotted headers. Enough for our config."""
    lines: List[str] = []

    def write_table(prefix: str, table: Dict[str, Any]) -> None:
        scalars: List[Tuple[str, Any]] = [(k, v) for k, v in table.items() if not isinstance(v, dict)]
        tables = [(k, v) for k, v in table.items() if isinstance(v, dict)]
        if prefix:
            if lines:
                lines.append("")
            lines.append(f"[{prefix}]")
        lines.extend(f"{key} = {_format_toml_value(value)}" for key, value in scalars)
        for key, value in tables:
            write_table(f"{prefix}.{key}" if prefix else key, value)

    write_table("", data)
    return "\n".join(lines) + "\n"


__all__ = ["_toml_escape", "_format_toml_value", "_toml_dumps"]
