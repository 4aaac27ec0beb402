"""Verification suites run by ``kh selftest``.

Every suite takes a ``SuiteContext`` and returns a ``SuiteResult``. Work
that is independent per diagram fans out over a thread pool; randomised
suites draw everything from ``random.Random`` seeded by the context, so
a given seed and configuration always check the same cases.
"""

import json
import logging
import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from tqdm import tqdm

from ..backend.cobordism import (
    RATIONALS,
    CobLin,
    Component,
    GroundRing,
    OrientedSmoothing,
    RawComponent,
    ReducedCobordism,
    boundary_circles,
    build_smoothing,
    compose_cob,
    connected_cobordism,
    evaluate_closed,
    ground_ring,
    make_smoothing,
    normalise_component,
    reduce_surface,
)
from ..backend.complex import (
    ChainComplex,
    PerturbedDoubleComplex,
    complex_as_pdc,
    complex_from_document,
    deloop_in_pdc,
    dg_reduce,
    relation_failures,
    total_complex,
    vertical_gauss_eliminate,
)
from ..backend.diagonal import coherent_diagonality, diagonality, expected_constant
from ..backend.exceptions import KhovanizerError
from ..backend.homology import HomologyTable, homology_table, two_line_check
from ..backend.planar import apply_as_pdc, apply_to_complexes, close_to_link
from ..backend.services.event_service import CancellationToken, OperationCancelledError
from ..backend.tangle import (
    CorpusEntry,
    TangleComplex,
    TangleDiagram,
    assemble,
    corpus_dir,
    components,
    compose_pieces,
    crossing_complex,
    crossing_order,
    cube_oracle,
    is_alternating,
    is_legal,
    join_attachment,
    khovanov_homology,
    load_diagram,
    match_boundary,
    random_alternating_tangle,
    reidemeister_pairs,
    sub_tangle,
)
from ..backend.tangle.exceptions import BadIncidence
from .summary import SuiteResult

logger = logging.getLogger(__name__)

T = TypeVar("T")

# one-crossing complexes and their diagonal constants
ONE_CROSSING_CONSTANTS = ((-1, -1), (1, -2))

PDC_MAX_STEPS = 25


@dataclass
class SuiteContext:
    seed: int
    entries: List[CorpusEntry]
    corpus: Optional[Path] = None
    settings: Dict[str, Any] = field(default_factory=dict)
    threads: int = 4
    max_oracle_crossings: int = 8
    token: Optional[CancellationToken] = None

    def setting(self, key: str, default: int) -> int:
        return int(self.settings.get(key, default))

    def rng(self, stream: int) -> random.Random:
        return random.Random(self.seed * 1009 + stream)

    def check_cancelled(self, where: str) -> None:
        if self.token is not None:
            self.token.throw_if_cancellation_requested(where)


def fan_out(
    ctx: SuiteContext,
    label: str,
    items: Sequence[T],
    check: Callable[[T], Optional[str]],
    describe: Callable[[T], str] = str,
) -> List[str]:
    """Run ``check`` on every item in parallel; returns failure messages in input order."""
    messages: Dict[int, str] = {}
    with ThreadPoolExecutor(max_workers=max(1, ctx.threads)) as executor:
        futures = {}
        for index, item in enumerate(items):
            futures[executor.submit(_guarded, ctx, check, item, describe)] = index
        with tqdm(total=len(items), desc=label, unit="case", leave=False, disable=None) as progress:
            for future in as_completed(futures):
                message = future.result()
                if message:
                    messages[futures[future]] = message
                progress.update(1)
    return [messages[index] for index in sorted(messages)]


def _guarded(
    ctx: SuiteContext, check: Callable[[T], Optional[str]], item: T, describe: Callable[[T], str]
) -> Optional[str]:
    ctx.check_cancelled("selftest")
    try:
        return check(item)
    except OperationCancelledError:
        raise
    except KhovanizerError as e:
        return f"{describe(item)}: {type(e).__name__}: {e}"


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    result = SuiteResult(name)
    started = time.perf_counter()
    body(result)
    result.elapsed = time.perf_counter() - started
    logger.info(
        "Suite %s: %d cases, %d failures (%.1fs)", name, result.cases, len(result.failures), result.elapsed
    )
    return result


def _entry_name(entry: CorpusEntry) -> str:
    return entry.name


def _differences(first: HomologyTable, second: HomologyTable) -> str:
    keys = sorted(set(first.groups) | set(second.groups))
    diff = [
        f"{key}: {first.groups.get(key, '0')} vs {second.groups.get(key, '0')}"
        for key in keys
        if first.groups.get(key) != second.groups.get(key)
    ]
    return "; ".join(diff[:4])


def load_complex_entry(entry: CorpusEntry, directory: Optional[Path]) -> ChainComplex:
    if entry.file is None:
        raise BadIncidence(f"Complex entry {entry.name} names no file")
    path = corpus_dir(directory) / entry.file
    return complex_from_document(json.loads(path.read_text(encoding="utf-8")))


def closed_homology(complex_: ChainComplex, ring: GroundRing = RATIONALS) -> HomologyTable:
    """Homology of a reduced link complex, or of the standard closure of a tangle complex."""
    if complex_.boundary_count:
        return homology_table(close_to_link(complex_), ring)
    reduced, _ = dg_reduce(complex_)
    return homology_table(reduced, ring)


def oracle_suite(ctx: SuiteContext) -> SuiteResult:
    """DG pipeline against the cube of resolutions, over Q and over Z with torsion."""
    entries = [e for e in ctx.entries if e.is_link and e.crossings <= ctx.max_oracle_crossings]

    def check(entry: CorpusEntry) -> Optional[str]:
        diagram = load_diagram(entry, ctx.corpus)
        for selector in ("q", "z"):
            ring = ground_ring(selector)
            ours = khovanov_homology(diagram, ring, ctx.token)
            cube = cube_oracle(diagram, ring, ctx.token)
            if ours != cube:
                return f"{entry.name} over the {ring.name}: {_differences(ours, cube)}"
        return None

    def body(result: SuiteResult) -> None:
        result.cases = len(entries)
        result.skipped = sum(1 for e in ctx.entries if e.is_link) - len(entries)
        result.failures = fan_out(ctx, "oracle", entries, check, _entry_name)
        result.mismatch = bool(result.failures)

    return _timed("oracle-equivalence", body)


def expected_tables_suite(ctx: SuiteContext) -> SuiteResult:
    """Corpus entries that record their rational homology."""
    entries = [e for e in ctx.entries if e.is_link and "homology" in e.expected]

    def check(entry: CorpusEntry) -> Optional[str]:
        expected = HomologyTable.from_ranks(
            {(int(i), int(j)): int(rank) for i, j, rank in entry.expected["homology"]}, RATIONALS
        )
        table = khovanov_homology(load_diagram(entry, ctx.corpus), RATIONALS, ctx.token)
        if table != expected:
            return f"{entry.name}: {_differences(table, expected)}"
        return None

    def body(result: SuiteResult) -> None:
        result.cases = len(entries)
        result.failures = fan_out(ctx, "tables", entries, check, _entry_name)

    return _timed("expected-tables", body)


def reidemeister_suite(ctx: SuiteContext) -> SuiteResult:
    """Diagrams one Reidemeister move apart have identical integral homology."""
    by_name = {entry.name: entry for entry in ctx.entries}
    pairs = reidemeister_pairs(ctx.corpus)

    def check(pair: Tuple[str, str, str]) -> Optional[str]:
        move, first, second = pair
        tables = [
            khovanov_homology(load_diagram(by_name[name], ctx.corpus), cancellation_token=ctx.token)
            for name in (first, second)
        ]
        if tables[0] != tables[1]:
            return f"{move} {first} / {second}: {_differences(tables[0], tables[1])}"
        return None

    def body(result: SuiteResult) -> None:
        missing = [name for _, a, b in pairs for name in (a, b) if name not in by_name]
        for name in missing:
            result.fail(f"Pair refers to unknown corpus entry {name}")
        usable = [pair for pair in pairs if pair[1] in by_name and pair[2] in by_name]
        result.cases = len(usable)
        result.failures.extend(fan_out(ctx, "reidemeister", usable, check, lambda p: f"{p[1]}/{p[2]}"))

    return _timed("reidemeister-invariance", body)


def generated_diagonality_suite(ctx: SuiteContext) -> SuiteResult:
    """Every generated alternating tangle has a diagonal reduced complex."""
    rng = ctx.rng(1)
    count = ctx.setting("generated_tangles", 200)
    tangles = [
        random_alternating_tangle(
            rng,
            max_crossings=ctx.setting("max_crossings", 6),
            max_boundary=ctx.setting("max_boundary", 8),
            name=f"generated-{n}",
        )
        for n in range(count)
    ]

    def check(diagram: TangleDiagram) -> Optional[str]:
        complex_ = assemble(diagram, require_alternating=True, cancellation_token=ctx.token).complex
        verdict = diagonality(complex_, reduce=False)
        if not verdict.is_diagonal:
            return f"{diagram.name} [{diagram}]: {verdict.to_document()}"
        return None

    def body(result: SuiteResult) -> None:
        result.cases = len(tangles)
        result.failures = fan_out(ctx, "diagonality", tangles, check, lambda d: d.name or str(d))

    return _timed("alternating-diagonality", body)


def coherence_suite(ctx: SuiteContext) -> SuiteResult:
    """Single crossings are coherently diagonal; recorded complexes match their labels."""
    complexes = [e for e in ctx.entries if e.kind == "complex"]

    def body(result: SuiteResult) -> None:
        for sign, constant in ONE_CROSSING_CONSTANTS:
            result.cases += 1
            verdict = coherent_diagonality(crossing_complex(sign))
            if not verdict.is_diagonal or verdict.constant != constant:
                result.fail(f"crossing of sign {sign:+d}: {verdict.to_document()}, expected C = {constant}")
        for entry in complexes:
            ctx.check_cancelled("coherence")
            result.cases += 1
            complex_ = load_complex_entry(entry, ctx.corpus)
            plain = diagonality(complex_)
            coherent = coherent_diagonality(complex_)
            want = entry.expected
            if "diagonal" in want and plain.is_diagonal != bool(want["diagonal"]):
                result.fail(f"{entry.name}: diagonal is {plain.is_diagonal}")
            if "constant" in want and plain.constant != want["constant"]:
                result.fail(f"{entry.name}: constant {plain.constant}, expected {want['constant']}")
            if "coherent" in want and coherent.is_diagonal != bool(want["coherent"]):
                result.fail(f"{entry.name}: coherent is {coherent.is_diagonal}")

    return _timed("coherent-diagonality", body)


def two_line_suite(ctx: SuiteContext) -> SuiteResult:
    """Non-split alternating links have rational homology on two adjacent lines."""
    entries = [
        e for e in ctx.entries if e.is_link and e.alternating and not e.split and 0 < e.crossings <= 8
    ]

    def check(entry: CorpusEntry) -> Optional[str]:
        table = khovanov_homology(load_diagram(entry, ctx.corpus), RATIONALS, ctx.token)
        found = two_line_check(table)
        if found is None:
            return f"{entry.name}: support is not on two lines"
        if "two_line" in entry.expected and found != entry.expected["two_line"]:
            return f"{entry.name}: K = {found}, expected {entry.expected['two_line']}"
        return None

    def body(result: SuiteResult) -> None:
        result.cases = len(entries)
        result.failures = fan_out(ctx, "two-line", entries, check, _entry_name)

    return _timed("two-line", body)


@dataclass
class CrossingSplit:
    diagram: TangleDiagram
    first: Tuple[int, ...]
    second: Tuple[int, ...]


def random_split(diagram: TangleDiagram, rng: random.Random) -> Optional[CrossingSplit]:
    """Cut a random legal crossing order in two; ``None`` if the second part is not connected."""
    if diagram.crossing_count < 2 or len(components(diagram)) != 1:
        return None
    order = crossing_order(diagram, rng)
    cut = rng.randint(1, len(order) - 1)
    first, second = tuple(sorted(order[:cut])), tuple(sorted(order[cut:]))
    if len(components(sub_tangle(diagram, second))) != 1:
        return None
    return CrossingSplit(diagram, first, second)


def _assemble_split(split: CrossingSplit, ring: GroundRing) -> Optional[Tuple[TangleComplex, TangleComplex]]:
    """Both pieces reduced on their own; ``None`` when a piece is not a disc."""
    try:
        return (
            assemble(sub_tangle(split.diagram, split.first), ring),
            assemble(sub_tangle(split.diagram, split.second), ring),
        )
    except BadIncidence:
        return None


def _split_sources(ctx: SuiteContext, rng: random.Random) -> List[TangleDiagram]:
    sources = [
        load_diagram(entry, ctx.corpus)
        for entry in ctx.entries
        if entry.kind in ("link", "tangle") and not entry.split and 2 <= entry.crossings <= 8
    ]
    sources.extend(
        random_alternating_tangle(rng, max_crossings=6, max_boundary=8, min_crossings=2, name=f"split-source-{n}")
        for n in range(10)
    )
    return sources


def _draw_splits(ctx: SuiteContext, rng: random.Random, wanted: int, sources: List[TangleDiagram]) -> List[CrossingSplit]:
    splits: List[CrossingSplit] = []
    attempts = 0
    while len(splits) < wanted and attempts < 40 * wanted and sources:
        attempts += 1
        split = random_split(rng.choice(sources), rng)
        if split is not None:
            splits.append(split)
    return splits


def _plain_objects(complex_: ChainComplex) -> Counter:
    """Object multiset with arc directions forgotten."""
    objects: Counter = Counter()
    for r, _, graded in complex_.entries():
        smoothing = graded.smoothing
        plain = build_smoothing(smoothing.boundary_count, smoothing.arcs, smoothing.loops, oriented=False)
        objects[(r, graded.q_shift, plain)] += 1
    return objects


def composition_suite(ctx: SuiteContext) -> SuiteResult:
    """Composing two reduced pieces agrees with reducing the whole diagram.

    Reduced object multisets are compared over Q, after aligning a tangle
    composite with the diagram's boundary. For alternating tangles the
    composite constant must be the sum of the parts minus the rotation
    number of the gluing word; alternating links must be two-line. Splits
    whose pieces are not discs are skipped and counted.
    """
    rng = ctx.rng(2)
    splits = _draw_splits(ctx, rng, ctx.setting("splits", 50), _split_sources(ctx, rng))
    skipped: List[CrossingSplit] = []

    def check(split: CrossingSplit) -> Optional[str]:
        label = f"{split.diagram.name or split.diagram} split {split.first}|{split.second}"
        pieces = _assemble_split(split, RATIONALS)
        if pieces is None:
            skipped.append(split)
            return None
        first, second = pieces
        try:
            composite = compose_pieces(first, second)
            if not split.diagram.is_link:
                composite = match_boundary(composite, split.diagram)
        except BadIncidence:
            skipped.append(split)
            return None
        whole = assemble(split.diagram, RATIONALS, cancellation_token=ctx.token)
        if _plain_objects(composite.complex) != _plain_objects(whole.complex):
            return f"{label}: object multisets differ"
        if first.pattern is None or second.pattern is None or not is_alternating(split.diagram):
            return None
        if split.diagram.is_link:
            if two_line_check(closed_homology(composite.complex)) is None:
                return f"{label}: support is not on two lines"
            return None
        parts = [diagonality(piece.complex, reduce=False) for piece in (first, second)]
        glued = diagonality(composite.complex, reduce=False)
        if any(part.vacuous for part in parts) or glued.vacuous:
            return None
        word = join_attachment(first.boundary, second.boundary, (first.pattern, second.pattern)).word
        expected = expected_constant([p.constant for p in parts if p.constant is not None], word)
        if not glued.is_diagonal or glued.constant != expected:
            return f"{label}: constant {glued.constant}, expected {expected}"
        return None

    def body(result: SuiteResult) -> None:
        result.cases = len(splits)
        result.failures = fan_out(ctx, "composition", splits, check, lambda s: s.diagram.name or "split")
        result.skipped = len(skipped)

    return _timed("composition", body)


def _pdc_moves(pdc: PerturbedDoubleComplex) -> List[Tuple[str, Any]]:
    moves: List[Tuple[str, Any]] = []
    for key in pdc.keys():
        p, q = pdc.node_of(key)
        if pdc.objects[key].smoothing.loop_count:
            moves.append(("deloop", (p, q, pdc.node(p, q).index(key))))
        for target in sorted(pdc.outgoing[key]):
            if target[1] == q and pdc.invertible_unit(key, target) is not None:
                moves.append(("eliminate", (q, (p, pdc.node(p + 1, q).index(target), pdc.node(p, q).index(key)))))
    return moves


def check_pdc_reduction(pdc: PerturbedDoubleComplex, rng: random.Random, max_steps: int = PDC_MAX_STEPS) -> List[str]:
    """Random delooping and vertical elimination; the relations and the closed homology must survive."""
    problems: List[str] = []
    reference = closed_homology(total_complex(pdc))
    for step in range(max_steps):
        moves = _pdc_moves(pdc)
        if not moves:
            break
        kind, argument = rng.choice(moves)
        if kind == "deloop":
            pdc = deloop_in_pdc(pdc, argument)
        else:
            column, position = argument
            pdc = vertical_gauss_eliminate(pdc, column, position)
        failures = relation_failures(pdc)
        if failures:
            k, source, target = failures[0]
            problems.append(f"step {step} ({kind}): relation k={k} fails from {source} to {target}")
            return problems
    after = closed_homology(total_complex(pdc, check=False))
    if after != reference:
        problems.append(f"homology changed: {_differences(reference, after)}")
    return problems


def spread_columns(complex_: ChainComplex, rng: random.Random, width: int = 2) -> Dict[Tuple[int, int], int]:
    """Random columns that never decrease along the differential.

    Degree ``r`` lands ``0..width`` columns past ``width * r``, so arrows
    become ``d^0`` up to ``d^{2 * width}``.
    """
    return {
        (r, index): width * (r - complex_.min_degree) + rng.randint(0, width)
        for r, index, _ in complex_.entries()
    }


def pdc_suite(ctx: SuiteContext) -> SuiteResult:
    """Double complexes stay valid under random delooping and vertical elimination.

    Each case reduces the double complex of a binary composition, and the
    unreduced glued complex spread over random columns, which starts out
    with perturbations ``d^i`` for ``i >= 2``.
    """
    rng = ctx.rng(3)
    count = ctx.setting("pdc_cases", 100)
    splits: List[Tuple[CrossingSplit, int]] = []
    attempts = 0
    while len(splits) < count and attempts < 40 * count:
        attempts += 1
        diagram = random_alternating_tangle(
            rng, max_crossings=4, max_boundary=6, min_crossings=2, name=f"pdc-{len(splits)}"
        )
        split = random_split(diagram, rng)
        if split is not None:
            splits.append((split, rng.randrange(2**31)))
    skipped: List[CrossingSplit] = []

    def check(case: Tuple[CrossingSplit, int]) -> Optional[str]:
        split, seed = case
        pieces = _assemble_split(split, RATIONALS)
        if pieces is None:
            skipped.append(split)
            return None
        first, second = pieces
        patterns = None if first.pattern is None or second.pattern is None else (first.pattern, second.pattern)
        attachment = join_attachment(first.boundary, second.boundary, patterns)
        if not is_legal(attachment.boundary):
            skipped.append(split)
            return None
        case_rng = random.Random(seed)
        pdc = apply_as_pdc(attachment.word, first.complex, second.complex)
        problems = check_pdc_reduction(pdc, case_rng)
        if problems:
            return f"{split.diagram.name} [{split.diagram}]: {problems[0]}"
        glued = apply_to_complexes(attachment.word, [first.complex, second.complex])
        spread = complex_as_pdc(glued, spread_columns(glued, case_rng))
        problems = check_pdc_reduction(spread, case_rng)
        if problems:
            return f"{split.diagram.name} [{split.diagram}] spread to span {spread.span()}: {problems[0]}"
        return None

    def body(result: SuiteResult) -> None:
        result.cases = len(splits)
        result.failures = fan_out(ctx, "pdc", splits, check, lambda c: c[0].diagram.name or "pdc")
        result.skipped = len(skipped)

    return _timed("perturbed-double-complexes", body)


NormalForm = Tuple[int, Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], bool], ...]]


def _closed_form(components: Iterable[RawComponent]) -> Optional[NormalForm]:
    coefficient = 1
    normal = []
    for c in components:
        if c.is_closed:
            coefficient *= evaluate_closed(c.genus, c.dots)
            continue
        form = normalise_component(c.genus, c.dots)
        if form is None:
            return None
        coefficient *= form[0]
        normal.append((c.bottom, c.top, form[1]))
    if coefficient == 0:
        return None
    return coefficient, tuple(sorted(normal))


def _smoothing_pool() -> Dict[int, List[OrientedSmoothing]]:
    pool: Dict[int, List[OrientedSmoothing]] = {}
    for arcs in ([(0, 1), (2, 3)], [(0, 3), (2, 1)], []):
        for loops in range(3):
            smoothing = make_smoothing(arcs, [1] * loops)
            pool.setdefault(smoothing.boundary_count, []).append(smoothing)
    return pool


def _random_cobordism(rng: random.Random, bottom: OrientedSmoothing, top: OrientedSmoothing) -> ReducedCobordism:
    """One connected piece, one disc per boundary circle, or a (dotted) identity."""
    if not bottom.curve_count and not top.curve_count:
        return ReducedCobordism(bottom, top, ())
    shapes = ["connected", "discs"] + (["identity"] if bottom == top else [])
    shape = rng.choice(shapes)
    if shape == "connected":
        return connected_cobordism(bottom, top, rng.random() < 0.3)
    if shape == "identity":
        dotted = rng.randrange(bottom.curve_count) if rng.random() < 0.5 else -1
        pieces = [Component((i,), (i,), i == dotted) for i in range(bottom.curve_count)]
        return ReducedCobordism(bottom, top, tuple(pieces))
    below, above = boundary_circles(bottom, top)
    circles: Dict[int, Tuple[List[int], List[int]]] = {}
    for curve, circle in enumerate(below):
        circles.setdefault(circle, ([], []))[0].append(curve)
    for curve, circle in enumerate(above):
        circles.setdefault(circle, ([], []))[1].append(curve)
    pieces = [Component(tuple(b), tuple(t), rng.random() < 0.3) for b, t in circles.values()]
    return ReducedCobordism(bottom, top, tuple(sorted(pieces)))


def random_morphism(rng: random.Random, bottom: OrientedSmoothing, top: OrientedSmoothing) -> CobLin:
    terms = [(_random_cobordism(rng, bottom, top), rng.choice((-2, -1, 1, 2, 3))) for _ in range(rng.randint(1, 3))]
    return CobLin.from_terms(bottom, top, terms)


def glue_in_order(chain: Sequence[CobLin], rng: Optional[random.Random] = None) -> CobLin:
    """Compose ``chain[0]`` then ``chain[1]`` and so on.

    Without ``rng`` the gluing runs left to right; with it each step glues a
    random adjacent pair.
    """
    pieces = list(chain)
    while len(pieces) > 1:
        j = 0 if rng is None else rng.randrange(len(pieces) - 1)
        pieces[j : j + 2] = [compose_cob(pieces[j], pieces[j + 1])]
    return pieces[0]


def local_relations_suite(ctx: SuiteContext) -> SuiteResult:
    """Closed-surface values, and composition that does not depend on gluing order.

    Chains of random cobordism sums are glued left to right and in two
    random orders; the normal forms must agree as morphisms. Raw surfaces
    reduced one relation at a time must also reach the closed form.
    """
    rng = ctx.rng(4)
    values = {"sphere": ((0, 0), 0), "dotted sphere": ((0, 1), 1), "two dots": ((0, 2), 0), "torus": ((1, 0), 2)}
    pool = _smoothing_pool()

    def body(result: SuiteResult) -> None:
        for name, ((genus, dots), value) in values.items():
            result.cases += 1
            found = evaluate_closed(genus, dots)
            if found != value:
                result.fail(f"{name} evaluates to {found}, expected {value}")
        for n in range(ctx.setting("composites", 1000)):
            if n % 100 == 0:
                ctx.check_cancelled("local relations")
            result.cases += 1
            objects = [rng.choice(pool[rng.choice(sorted(pool))])]
            objects.extend(
                rng.choice(pool[objects[0].boundary_count]) for _ in range(rng.randint(2, 4))
            )
            chain = [random_morphism(rng, a, b) for a, b in zip(objects, objects[1:])]
            reference = glue_in_order(chain)
            for attempt in range(2):
                other = glue_in_order(chain, random.Random(rng.randrange(2**31)))
                if not other.equals(reference):
                    result.fail(f"composite {n}, order {attempt}: {other} differs from {reference}")
                    break
            surface = []
            curve = 0
            for _ in range(rng.randint(1, 4)):
                bottom = tuple(range(curve, curve + rng.randint(0, 2)))
                curve += len(bottom)
                top = tuple(range(curve, curve + rng.randint(0, 2)))
                curve += len(top)
                surface.append(RawComponent(bottom, top, rng.randint(0, 2), rng.randint(0, 2)))
            shuffled = reduce_surface(surface, random.Random(rng.randrange(2**31)))
            as_tuple = None if shuffled is None else (shuffled[0], tuple((c.bottom, c.top, c.dotted) for c in shuffled[1]))
            if as_tuple != _closed_form(surface):
                result.fail(f"surface {n}: {as_tuple} / {_closed_form(surface)}")

    return _timed("local-relations", body)


SUITES: Dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "oracle-equivalence": oracle_suite,
    "expected-tables": expected_tables_suite,
    "reidemeister-invariance": reidemeister_suite,
    "alternating-diagonality": generated_diagonality_suite,
    "coherent-diagonality": coherence_suite,
    "two-line": two_line_suite,
    "composition": composition_suite,
    "perturbed-double-complexes": pdc_suite,
    "local-relations": local_relations_suite,
}


def run_suites(ctx: SuiteContext, names: Optional[Sequence[str]] = None) -> List[SuiteResult]:
    selected = list(SUITES) if not names else list(names)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite(s): {', '.join(unknown)}. Available: {', '.join(SUITES)}")
    results = []
    for name in selected:
        ctx.check_cancelled(name)
        results.append(SUITES[name](ctx))
    return results


__all__ = [
    "SuiteContext",
    "SUITES",
    "run_suites",
    "fan_out",
    "random_split",
    "check_pdc_reduction",
    "closed_homology",
    "load_complex_entry",
]
