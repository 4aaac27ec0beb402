"""Diagrams, gravity, crossing complexes, assembly and the cube oracle."""

from .assembly import (
    CROSSING_PATTERN,
    Attachment,
    TangleComplex,
    assemble,
    compose_pieces,
    crossing_order,
    is_legal,
    join_attachment,
    kh,
    khovanov_homology,
    match_boundary,
    self_closure,
)
from .corpus import (
    CORPUS_ENV,
    CorpusEntry,
    corpus_dir,
    find_entry,
    load_diagram,
    load_index,
    read_diagram,
    reidemeister_pairs,
)
from .crossing import crossing_complex, crossing_smoothings, loop_complex
from .diagram import (
    TangleDiagram,
    check_planar,
    components,
    is_split,
    make_diagram,
    parse_pd,
    sub_tangle,
)
from .exceptions import BadIncidence, NotAlternating, NotClosed, ParseError, Split, TangleError
from .generator import braid_closure, random_alternating_tangle
from .gravity import GravityAssignment, assign_gravity, gravity_or_none, is_alternating
from .jones import jones_polynomial
from .oracle import cube_oracle
from .orientation import CrossingSigns, crossing_signs, trace_strands

__all__ = [
    "CROSSING_PATTERN",
    "Attachment",
    "TangleComplex",
    "assemble",
    "compose_pieces",
    "crossing_order",
    "is_legal",
    "join_attachment",
    "kh",
    "khovanov_homology",
    "match_boundary",
    "self_closure",
    "CORPUS_ENV",
    "CorpusEntry",
    "corpus_dir",
    "find_entry",
    "load_diagram",
    "load_index",
    "read_diagram",
    "reidemeister_pairs",
    "crossing_complex",
    "crossing_smoothings",
    "loop_complex",
    "TangleDiagram",
    "check_planar",
    "components",
    "is_split",
    "make_diagram",
    "parse_pd",
    "sub_tangle",
    "BadIncidence",
    "NotAlternating",
    "NotClosed",
    "ParseError",
    "Split",
    "TangleError",
    "braid_closure",
    "random_alternating_tangle",
    "GravityAssignment",
    "assign_gravity",
    "gravity_or_none",
    "is_alternating",
    "jones_polynomial",
    "cube_oracle",
    "CrossingSigns",
    "crossing_signs",
    "trace_strands",
]
