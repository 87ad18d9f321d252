"""Lattice paths with unit North/East steps, the EN-turn statistic, and the
two path-side multiplicity engines: a Lindstrom-Gessel-Viennot determinant
and exhaustive enumeration of nonintersecting families.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .grassmannian import GridPoint, Instance
from .polynomial import IntPolynomial

EAST = "E"
NORTH = "N"


@dataclass(frozen=True)
class LatticePath:
    start: GridPoint
    steps: str = ""

    def __post_init__(self):
        object.__setattr__(self, "start", GridPoint(*self.start))
        if set(self.steps) - {EAST, NORTH}:
            raise ValueError(f"steps must be over {{E, N}}, got {self.steps!r}")

    @cached_property
    def points(self) -> tuple[GridPoint, ...]:
        x, y = self.start
        pts = [GridPoint(x, y)]
        for s in self.steps:
            if s == EAST:
                x += 1
            else:
                y += 1
            pts.append(GridPoint(x, y))
        return tuple(pts)

    @property
    def end(self) -> GridPoint:
        return self.points[-1]

    def __str__(self):
        return f"{self.start}:{self.steps or '-'}"


def path_points(p: LatticePath) -> list[GridPoint]:
    return list(p.points)


def en_turn_points(p: LatticePath) -> list[GridPoint]:
    """Points that end an East step and start a North step."""
    return [p.points[k + 1] for k in range(len(p.steps) - 1) if p.steps[k : k + 2] == "EN"]


def en_turns(p: LatticePath) -> int:
    return p.steps.count("EN")


@dataclass(frozen=True)
class PathFamily:
    """Paths indexed by start point: ``paths[l]`` runs from A_{l+1}."""

    instance: Instance
    paths: tuple[LatticePath, ...]

    @property
    def sigma(self) -> tuple[int, ...]:
        return self.instance.sigma

    def step_strings(self) -> list[str]:
        return [p.steps for p in self.paths]

    def all_points(self) -> list[GridPoint]:
        return [q for p in self.paths for q in p.points]

    def is_nonintersecting(self) -> bool:
        pts = self.all_points()
        return len(pts) == len(set(pts))

    def is_valid(self) -> bool:
        inst = self.instance
        if len(self.paths) != inst.d:
            return False
        for l, p in enumerate(self.paths, start=1):
            if p.start != inst.starts[l - 1] or p.end != inst.target(l):
                return False
        return self.is_nonintersecting()


def en_turns_family(f: PathFamily) -> int:
    return sum(en_turns(p) for p in f.paths)


def count_ne_paths(a: GridPoint, e: GridPoint) -> int:
    dx, dy = e[0] - a[0], e[1] - a[1]
    if dx < 0 or dy < 0:
        return 0
    return math.comb(dx + dy, dx)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def lgv_matrix(inst: Instance) -> list[list[int]]:
    return [[count_ne_paths(a, e) for e in inst.ends] for a in inst.starts]


def lgv_multiplicity(inst: Instance) -> int:
    return abs(bareiss_determinant(lgv_matrix(inst)))


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for k in range(len(perm)):
        if seen[k]:
            continue
        length = 0
        j = k
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# --- enumeration -----------------------------------------------------------


def _single_paths(start: GridPoint, target: GridPoint, blocked: frozenset | set) -> Iterator[str]:
    """All N/E step strings from start to target avoiding ``blocked``,
    North tried before East."""
    tx, ty = target
    steps: list[str] = []

    def rec(x, y):
        if x == tx and y == ty:
            yield "".join(steps)
            return
        if y < ty and (x, y + 1) not in blocked:
            steps.append(NORTH)
            yield from rec(x, y + 1)
            steps.pop()
        if x < tx and (x + 1, y) not in blocked:
            steps.append(EAST)
            yield from rec(x + 1, y)
            steps.pop()

    yield from rec(*start)


def _families_from(inst: Instance, prefix: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
    """Completions of a partial family whose first len(prefix) paths are fixed."""
    d = inst.d
    reserved = set(inst.starts) | set(inst.ends)
    occupied = set(reserved)
    for l, steps in enumerate(prefix, start=1):
        occupied.update(LatticePath(inst.starts[l - 1], steps).points)

    chosen = list(prefix)

    def rec(l):
        if l > d:
            yield tuple(chosen)
            return
        a, e = inst.starts[l - 1], inst.target(l)
        blocked = occupied - {a, e}
        for steps in _single_paths(a, e, blocked):
            pts = LatticePath(a, steps).points
            added = [q for q in pts if q not in occupied]
            occupied.update(added)
            chosen.append(steps)
            yield from rec(l + 1)
            chosen.pop()
            occupied.difference_update(added)

    yield from rec(len(prefix) + 1)


def iter_families(inst: Instance) -> Iterator[PathFamily]:
    """Nonintersecting families joining A_l to E_sigma(l), built rightmost
    path first in a deterministic order."""
    for steps in _families_from(inst, ()):
        yield PathFamily(inst, tuple(LatticePath(a, s) for a, s in zip(inst.starts, steps)))


def enumerate_families(inst: Instance) -> list[PathFamily]:
    return list(iter_families(inst))


def _turn_counts(args) -> dict[int, int]:
    inst, prefix = args
    counts: dict[int, int] = {}
    for steps in _families_from(inst, prefix):
        t = sum(s.count("EN") for s in steps)
        counts[t] = counts.get(t, 0) + 1
    return counts


def turn_polynomial(inst: Instance, workers: int | None = None) -> IntPolynomial:
    """Sum of z**EN(P) over all nonintersecting families P.

    With ``workers > 1`` the search tree is split on the choice of the first
    path and the subtrees are counted in separate processes.
    """
    if inst.d == 0:
        return IntPolynomial.one()
    if not workers or workers <= 1:
        return IntPolynomial.from_mapping(_turn_counts((inst, ())))
    a, e = inst.starts[0], inst.target(1)
    blocked = (set(inst.starts) | set(inst.ends)) - {a, e}
    jobs = [(inst, (s,)) for s in _single_paths(a, e, blocked)]
    total = IntPolynomial()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_turn_counts, jobs):
            total = total + IntPolynomial.from_mapping(part)
    return total


def count_families(inst: Instance) -> int:
    return sum(1 for _ in _families_from(inst, ()))
