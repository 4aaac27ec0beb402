from __future__ import annotations

import logging

from ..cobordism import GradedSmoothing, identity_cobordism
from .chain_complex import ChainComplex
from .exceptions import ComplexError
from .reduction import dg_reduce
from .workspace import ComplexWorkspace

logger = logging.getLogger(__name__)


def _scalar_ready(complex_: ChainComplex) -> ChainComplex:
    if complex_.boundary_count not in (None, 0):
        raise ComplexError("The second tensor factor must be boundary-free")
    if complex_.loop_count():
        complex_, _ = dg_reduce(complex_)
    return complex_


def tensor(first: ChainComplex, second: ChainComplex) -> ChainComplex:
    """Disjoint union of a complex with a boundary-free one.

    ``second`` is reduced first when it still carries loops, so each of its
    cells is a scalar. The differential is ``d ⊗ 1 + (-1)^r 1 ⊗ d``.
    """
    second = _scalar_ready(second)
    workspace = ComplexWorkspace(first.ring)
    for r1, i, x in first.entries():
        for r2, j, y in second.entries():
            workspace.add_object(
                (r1, i, r2, j), r1 + r2, GradedSmoothing(x.smoothing, x.q_shift + y.q_shift)
            )
    for offset, matrix in enumerate(first.differentials):
        r1 = first.min_degree + offset
        for row, column, value in matrix.cells:
            for r2, j, _ in second.entries():
                workspace.add_to_cell((r1, column, r2, j), (r1 + 1, row, r2, j), value)
    for offset, matrix in enumerate(second.differentials):
        r2 = second.min_degree + offset
        for row, column, value in matrix.cells:
            scalar = value.scalar()
            for r1, i, x in first.entries():
                sign = -1 if r1 % 2 else 1
                workspace.add_to_cell(
                    (r1, i, r2, column),
                    (r1, i, r2 + 1, row),
                    identity_cobordism(x.smoothing).scale(sign * scalar),
                )
    result = workspace.to_complex()
    logger.debug("Tensored %d x %d objects", first.size, second.size)
    return result


__all__ = ["tensor"]
