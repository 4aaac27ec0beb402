"""The bundled diagram corpus.

``index.yaml`` lists every entry with its ground-truth labels. An entry
either names a PD/JSON file or gives a braid word whose closure is the
diagram. ``KH_CORPUS_DIR`` points the loader at another directory.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml

from .diagram import TangleDiagram, parse_pd
from .exceptions import ParseError
from .generator import braid_closure

logger = logging.getLogger(__name__)

CORPUS_ENV = "KH_CORPUS_DIR"
BUNDLED_CORPUS = Path(__file__).resolve().parents[2] / "corpus"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str = "link"
    file: Optional[str] = None
    braid: Tuple[int, ...] = ()
    strands: Optional[int] = None
    crossings: int = 0
    alternating: bool = True
    split: bool = False
    expected: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def is_link(self) -> bool:
        return self.kind == "link"


def corpus_dir(override: Optional[Union[str, Path]] = None) -> Path:
    """``override`` first, then ``KH_CORPUS_DIR``, then the bundled corpus."""
    if override:
        return Path(override).expanduser()
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env).expanduser()
    return BUNDLED_CORPUS


def _read_index(directory: Path) -> Dict[str, Any]:
    path = directory / "index.yaml"
    try:
        with path.open("r", encoding="utf-8") as handle:
            document = yaml.safe_load(handle) or {}
    except FileNotFoundError:
        raise ParseError(f"No corpus index at {path}") from None
    except yaml.YAMLError as e:
        raise ParseError(f"Corpus index {path} is not valid YAML: {e}") from e
    if not isinstance(document, dict):
        raise ParseError(f"Corpus index {path} must be a mapping")
    return document


def load_index(directory: Optional[Union[str, Path]] = None) -> List[CorpusEntry]:
    root = corpus_dir(directory)
    entries = []
    for raw in _read_index(root).get("entries", []):
        braid = raw.get("braid") or {}
        entries.append(
            CorpusEntry(
                name=raw["name"],
                kind=raw.get("kind", "link"),
                file=raw.get("file"),
                braid=tuple(braid.get("word", ())),
                strands=braid.get("strands"),
                crossings=int(raw.get("crossings", 0)),
                alternating=bool(raw.get("alternating", True)),
                split=bool(raw.get("split", False)),
                expected=dict(raw.get("expected") or {}),
            )
        )
    logger.debug("Loaded %d corpus entries from %s", len(entries), root)
    return entries


def reidemeister_pairs(directory: Optional[Union[str, Path]] = None) -> List[Tuple[str, str, str]]:
    """``(move, first, second)`` triples of entries related by one move."""
    pairs = _read_index(corpus_dir(directory)).get("pairs", [])
    return [(p["move"], p["first"], p["second"]) for p in pairs]


def find_entry(name: str, directory: Optional[Union[str, Path]] = None) -> Optional[CorpusEntry]:
    for entry in load_index(directory):
        if entry.name == name:
            return entry
    return None


def load_diagram(entry: CorpusEntry, directory: Optional[Union[str, Path]] = None) -> TangleDiagram:
    if entry.braid:
        return braid_closure(entry.braid, entry.strands, entry.name)
    if entry.file is None:
        raise ParseError(f"Corpus entry {entry.name} has neither a file nor a braid")
    path = corpus_dir(directory) / entry.file
    return parse_pd(path.read_text(encoding="utf-8"), entry.name)


def read_diagram(source: str, directory: Optional[Union[str, Path]] = None) -> TangleDiagram:
    """A file path, a corpus entry name, or inline PD text."""
    path = Path(source).expanduser()
    if path.is_file():
        return parse_pd(path.read_text(encoding="utf-8"), path.stem)
    entry = find_entry(source, directory) if "(" not in source and "{" not in source else None
    if entry is not None:
        if entry.kind == "complex":
            raise ParseError(f"Corpus entry {entry.name} is a complex, not a diagram")
        return load_diagram(entry, directory)
    return parse_pd(source)


__all__ = [
    "CORPUS_ENV",
    "BUNDLED_CORPUS",
    "CorpusEntry",
    "corpus_dir",
    "load_index",
    "reidemeister_pairs",
    "find_entry",
    "load_diagram",
    "read_diagram",
]
