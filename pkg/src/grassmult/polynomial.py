"""Exact one-variable polynomials with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficient of z**t at index t; trailing zeros are stripped."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> IntPolynomial:
        """Sum of z**e over the given exponents."""
        coeffs: list[int] = []
        for e in exponents:
            if e >= len(coeffs):
                coeffs.extend([0] * (e + 1 - len(coeffs)))
            coeffs[e] += 1
        return cls(tuple(coeffs))

    @classmethod
    def from_mapping(cls, terms: Mapping[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        coeffs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            coeffs[e] += c
        return cls(tuple(coeffs))

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, t: int) -> int:
        return self.coefficients[t] if 0 <= t < len(self.coefficients) else 0

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for t, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if t == 0 else ("z" if t == 1 else f"z^{t}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)
