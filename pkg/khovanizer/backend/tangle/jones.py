"""Kauffman bracket state sum, normalised as the graded Euler characteristic of Kh."""

from __future__ import annotations

from collections import Counter

import sympy

from ..homology.table import q
from .diagram import TangleDiagram
from .orientation import crossing_signs
from .states import all_states


def jones_polynomial(diagram: TangleDiagram) -> sympy.Expr:
    """``(-1)^{n-} q^{n+ - 2n-} Σ_v (-q)^{|v|} (q + q^{-1})^{circles(v)}``.

    The unknot gives ``q + q^{-1}``.
    """
    signs = crossing_signs(diagram)
    n_plus, n_minus = signs.positive, signs.negative
    shapes = Counter((state.height, state.circle_count) for state in all_states(diagram))
    total = sympy.Add(
        *(count * (-q) ** height * (q + 1 / q) ** circles for (height, circles), count in sorted(shapes.items()))
    )
    return sympy.expand((-1) ** n_minus * q ** (n_plus - 2 * n_minus) * total)


__all__ = ["jones_polynomial"]
