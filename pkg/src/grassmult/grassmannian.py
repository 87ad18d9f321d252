"""Cosets of S_n/(S_d x S_{n-d}), the induced Bruhat order, and the
lattice-point geometry (start points, end points, kappa, sigma) attached to
a pair tau <= w.

Points are (x, y) with x the column and y the row.  Start points sit on the
row y = d; end points lie in the strip 1 <= x <= d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


class GrassmannianError(ValueError):
    """Malformed shape or coset data."""


class NotOnVariety(GrassmannianError):
    """Raised when tau is not below w in the induced Bruhat order."""


class GridPoint(NamedTuple):
    x: int
    y: int

    def __str__(self):
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class GrassmannianShape:
    n: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.d, int):
            raise GrassmannianError("n and d must be integers")
        if self.n < 0 or not 0 <= self.d <= self.n:
            raise GrassmannianError(f"need 0 <= d <= n, got n={self.n}, d={self.d}")


@dataclass(frozen=True)
class CosetRep:
    """A coset, stored as the strictly increasing vector of the first d
    letters of its minimal representative."""

    shape: GrassmannianShape
    entries: tuple[int, ...]

    def __post_init__(self):
        n, d = self.shape.n, self.shape.d
        if len(self.entries) != d:
            raise GrassmannianError(f"expected {d} entries, got {len(self.entries)}")
        for e in self.entries:
            if not isinstance(e, int) or not 1 <= e <= n:
                raise GrassmannianError(f"entry {e!r} outside [1, {n}]")
        if any(a >= b for a, b in zip(self.entries, self.entries[1:])):
            raise GrassmannianError(f"entries {self.entries} not strictly increasing")

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def d(self) -> int:
        return self.shape.d

    def __str__(self):
        return ",".join(map(str, self.entries))


@dataclass(frozen=True)
class FullPermutation:
    word: tuple[int, ...]
    d: int

    def __post_init__(self):
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise GrassmannianError(f"{self.word} is not a permutation of 1..{n}")
        head, tail = self.word[: self.d], self.word[self.d :]
        if list(head) != sorted(head) or list(tail) != sorted(tail):
            raise GrassmannianError(f"{self.word} is not a minimal coset representative")


def make_coset(shape: GrassmannianShape, entries: Sequence[int]) -> CosetRep:
    return CosetRep(shape, tuple(int(e) for e in entries))


def all_cosets(shape: GrassmannianShape):
    """Every coset of the given shape, in lexicographic order."""
    from itertools import combinations

    for c in combinations(range(1, shape.n + 1), shape.d):
        yield CosetRep(shape, c)


def expand_minimal(c: CosetRep) -> FullPermutation:
    """The minimal representative: entries, then the complement ascending."""
    chosen = set(c.entries)
    rest = tuple(k for k in range(1, c.n + 1) if k not in chosen)
    return FullPermutation(c.entries + rest, c.d)


def _same_shape(a: CosetRep, b: CosetRep):
    if a.shape != b.shape:
        raise GrassmannianError(f"shape mismatch: {a.shape} vs {b.shape}")


def bruhat_leq(a: CosetRep, b: CosetRep) -> bool:
    """Induced Bruhat order: componentwise comparison of the entry vectors."""
    _same_shape(a, b)
    return all(x <= y for x, y in zip(a.entries, b.entries))


def kappa_vector(w: CosetRep, tau: CosetRep) -> tuple[int, ...]:
    """kappa_q = number of tau entries strictly larger than the q-th entry of w."""
    _same_shape(w, tau)
    return tuple(sum(1 for j in tau.entries if i < j) for i in w.entries)


def start_points(d: int) -> tuple[GridPoint, ...]:
    return tuple(GridPoint(d + 1 - l, d) for l in range(1, d + 1))


def end_points(w: CosetRep, kappa: Sequence[int]) -> tuple[GridPoint, ...]:
    d = w.d
    return tuple(GridPoint(d - k, k + i) for k, i in zip(kappa, w.entries))


@dataclass(frozen=True)
class Instance:
    """The point tau on the Schubert variety X(w), with its path geometry.

    ``starts[l]`` and ``ends[l]`` hold A_{l+1} and E_{l+1}; ``sigma`` is
    one-based, so path l+1 joins A_{l+1} to ``ends[sigma[l] - 1]``.
    """

    shape: GrassmannianShape
    w: CosetRep
    tau: CosetRep
    kappa: tuple[int, ...]
    starts: tuple[GridPoint, ...]
    ends: tuple[GridPoint, ...]
    sigma: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def d(self) -> int:
        return self.shape.d

    def target(self, l: int) -> GridPoint:
        """End point of the path starting at A_l (one-based l)."""
        return self.ends[self.sigma[l - 1] - 1]

    def rectangle(self):
        """Reflections (x, y) with 1 <= x <= d < y <= n, column by column."""
        d, n = self.d, self.n
        return [GridPoint(x, y) for x in range(1, d + 1) for y in range(d + 1, n + 1)]

    def __str__(self):
        return f"n={self.n} d={self.d} w=({self.w}) tau=({self.tau})"


def build_instance(w: CosetRep, tau: CosetRep) -> Instance:
    if not bruhat_leq(tau, w):
        raise NotOnVariety(f"tau=({tau}) is not <= w=({w}) in Bruhat order")
    kappa = kappa_vector(w, tau)
    starts = start_points(w.d)
    ends = end_points(w, kappa)
    if len(set(ends)) != len(ends):
        raise GrassmannianError(f"end points not distinct: {ends}")
    sigma = connection_permutation(starts, ends)
    return Instance(w.shape, w, tau, kappa, starts, ends, sigma)


def instance_from_entries(n: int, d: int, w: Sequence[int], tau: Sequence[int]) -> Instance:
    shape = GrassmannianShape(n, d)
    return build_instance(make_coset(shape, w), make_coset(shape, tau))


def connection_permutation(starts, ends) -> tuple[int, ...]:
    """Which end point each start point is joined to.

    Runs light-and-shadow on an empty multiset: iteration l walks the border
    of the remaining shadows up from A_l and stops at the first end point it
    meets.
    """
    from .shadow import InconsistentGeometry, walk_border

    remaining_ends = {e: k + 1 for k, e in enumerate(ends)}
    remaining_starts = list(starts)
    sigma = []
    for a in starts:
        blockers = set(remaining_starts) | set(remaining_ends)
        path = walk_border(blockers, a, stop=lambda p: p in remaining_ends)
        if path is None:
            raise InconsistentGeometry(f"border from {a} reaches no end point")
        e = path.end
        sigma.append(remaining_ends.pop(e))
        remaining_starts.remove(a)
    return tuple(sigma)
