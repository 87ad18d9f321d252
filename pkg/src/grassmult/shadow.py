"""Light and shadow with the sun in the south-east.

The shadow of a point (x, y) is the closed quadrant of points weakly left
and weakly above it.  Walking the bottom-right border of a union of such
shadows from a point on the border, one steps East whenever the point to
the East is still shadowed and North otherwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .grassmannian import GridPoint, Instance
from .paths import EAST, NORTH, LatticePath, PathFamily


class InconsistentGeometry(RuntimeError):
    """The empty-multiset sweep failed; never happens for a valid instance."""


class ChainConditionViolation(ValueError):
    """The multiset cannot be covered by a family of nonintersecting paths."""


@dataclass(frozen=True)
class ReflectionMultiset:
    """A finite multiset of grid points, stored as sorted (point, count) pairs."""

    counts: tuple[tuple[GridPoint, int], ...] = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for p, c in self.counts:
            if c < 1:
                raise ValueError(f"multiplicity of {p} must be >= 1, got {c}")
            merged[GridPoint(*p)] += c
        object.__setattr__(self, "counts", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, points: Iterable) -> ReflectionMultiset:
        return cls(tuple(Counter(GridPoint(*p) for p in points).items()))

    def as_counter(self) -> Counter:
        return Counter(dict(self.counts))

    def support(self) -> frozenset[GridPoint]:
        return frozenset(p for p, _ in self.counts)

    def multiplicity(self, p) -> int:
        return dict(self.counts).get(GridPoint(*p), 0)

    def __iter__(self) -> Iterator[GridPoint]:
        for p, c in self.counts:
            for _ in range(c):
                yield p

    def __len__(self):
        return sum(c for _, c in self.counts)

    def __contains__(self, p):
        return self.multiplicity(p) > 0

    def in_rectangle(self, d: int, n: int | None = None) -> bool:
        return all(1 <= p.x <= d and p.y >= d + 1 and (n is None or p.y <= n) for p in self.support())

    def __str__(self):
        parts = [str(p) if c == 1 else f"{p}^{c}" for p, c in self.counts]
        return "{" + ", ".join(parts) + "}"


def _shadowed(q, pts) -> bool:
    return any(p[0] >= q[0] and p[1] <= q[1] for p in pts)


def walk_border(
    points: Iterable,
    start: GridPoint,
    stop: Callable[[GridPoint], bool],
    give_up: Callable[[GridPoint], bool] | None = None,
) -> LatticePath | None:
    """Walk the bottom-right border of the shadows of ``points`` from
    ``start`` until ``stop`` holds.  Returns None if the walk leaves the
    region where ``stop`` could still hold."""
    pts = {GridPoint(*p) for p in points} | {GridPoint(*start)}
    max_x = max(p.x for p in pts)
    max_y = max(p.y for p in pts)
    x, y = start
    steps = []
    while True:
        here = GridPoint(x, y)
        if stop(here):
            return LatticePath(GridPoint(*start), "".join(steps))
        if give_up is not None and give_up(here):
            return None
        if x >= max_x and y >= max_y:
            return None
        if _shadowed((x + 1, y), pts):
            steps.append(EAST)
            x += 1
        else:
            steps.append(NORTH)
            y += 1


def shadow_border(points: Iterable, start: GridPoint, to: GridPoint) -> LatticePath:
    start, to = GridPoint(*start), GridPoint(*to)
    path = walk_border(
        set(points) | {to},
        start,
        stop=lambda p: p == to,
        give_up=lambda p: p.x > to.x or p.y > to.y,
    )
    if path is None:
        raise ChainConditionViolation(f"{to} is not reachable on the border from {start}")
    return path


@dataclass(frozen=True)
class ShadowStep:
    path: LatticePath
    removed: tuple[GridPoint, ...]


def light_and_shadow_steps(S, inst: Instance) -> list[ShadowStep]:
    """Run the d iterations, recording each border path and the points it
    removes (start and end point included)."""
    remaining = S.as_counter() if isinstance(S, ReflectionMultiset) else Counter(GridPoint(*p) for p in S)
    starts = list(inst.starts)
    ends = set(inst.ends)
    out = []
    for l in range(1, inst.d + 1):
        a, e = inst.starts[l - 1], inst.target(l)
        others = ends - {e}
        blockers = set(remaining) | set(starts) | ends
        path = walk_border(
            blockers,
            a,
            stop=lambda p: p == e,
            give_up=lambda p: p.x > e.x or p.y > e.y or p in others,
        )
        if path is None:
            raise ChainConditionViolation(f"iteration {l}: border from {a} misses {e}")
        removed = []
        for p in path.points:
            if p == a or p == e or p in remaining:
                removed.append(p)
            remaining.pop(p, None)
        starts.remove(a)
        ends.discard(e)
        out.append(ShadowStep(path, tuple(removed)))
    if remaining:
        left = ReflectionMultiset(tuple(remaining.items()))
        raise ChainConditionViolation(f"points not covered after {inst.d} iterations: {left}")
    return out


def light_and_shadow(S, inst: Instance) -> PathFamily:
    steps = light_and_shadow_steps(S, inst)
    return PathFamily(inst, tuple(s.path for s in steps))


def family_point_multiset(f: PathFamily) -> ReflectionMultiset:
    d = f.instance.d
    return ReflectionMultiset.of(q for p in f.paths for q in p.points if q.y > d)
