"""The (conjectural) Hilbert series of the tangent cone at tau on X(w):
numerator = EN-turn generating function of the nonintersecting families,
denominator = (1 - z)**T with T = dim X(w)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .grassmannian import Instance
from .paths import turn_polynomial
from .polynomial import IntPolynomial
from .reflections import chain_condition


@dataclass(frozen=True)
class HilbertSeries:
    numerator: IntPolynomial
    pole_order: int
    conjectural: bool = True

    def __str__(self):
        return f"({self.numerator}) / (1 - z)^{self.pole_order}"


def binom(a: int, b: int) -> int:
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return math.comb(a, b)


def pole_order(inst: Instance) -> int:
    d = inst.d
    return sum(inst.w.entries) - d * (d + 1) // 2


def hilbert_series(inst: Instance, workers: int | None = None) -> HilbertSeries:
    return HilbertSeries(turn_polynomial(inst, workers=workers), pole_order(inst))


def hilbert_function(hs: HilbertSeries, m: int) -> int:
    """Coefficient of z**m in numerator / (1 - z)**T."""
    T = hs.pole_order
    return sum(h * binom(T + m - t - 1, m - t) for t, h in enumerate(hs.numerator.coefficients))


def hilbert_function_oracle(inst: Instance, m: int, s1=chain_condition) -> int:
    """Brute force: multisets of size m over the rectangle whose support
    has the chain property."""
    rect = inst.rectangle()
    if m == 0:
        return 1
    return sum(1 for ms in combinations_with_replacement(rect, m) if s1(set(ms), inst))


def multiplicity_from_series(hs: HilbertSeries) -> int:
    return hs.numerator(1)
