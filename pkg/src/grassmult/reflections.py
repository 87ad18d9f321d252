"""Sets of reflections s = (x, y), 1 <= x <= d < y <= n, read as points.

Two checks of the Bruhat condition on commuting chains are provided: a naive
one that multiplies tau by every chain drawn from the set, and the fast chain
condition that bounds chain lengths inside the regions above each end point.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .grassmannian import FullPermutation, GridPoint, Instance, expand_minimal
from .shadow import ReflectionMultiset


@dataclass(frozen=True)
class ReflectionChain:
    elements: tuple[GridPoint, ...]

    def __post_init__(self):
        els = tuple(GridPoint(*p) for p in self.elements)
        for a, b in zip(els, els[1:]):
            if not (a.x < b.x and a.y > b.y):
                raise ValueError(f"{els} is not a chain (x increasing, y decreasing)")
        object.__setattr__(self, "elements", els)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class Region:
    """Points weakly left of and strictly above ``anchor``."""

    anchor: GridPoint

    def __contains__(self, p) -> bool:
        return p[0] <= self.anchor[0] and p[1] > self.anchor[1]


def _support(S) -> list[GridPoint]:
    if isinstance(S, ReflectionMultiset):
        return sorted(S.support())
    return sorted({GridPoint(*p) for p in S})


def iter_chains(points: Iterable) -> Iterator[ReflectionChain]:
    """Every chain (the empty one included) drawn from a set of points."""
    pts = sorted({GridPoint(*p) for p in points})
    current: list[GridPoint] = []

    def rec(k):
        yield ReflectionChain(tuple(current))
        for j in range(k, len(pts)):
            p = pts[j]
            if current and not (current[-1].x < p.x and current[-1].y > p.y):
                continue
            current.append(p)
            yield from rec(j + 1)
            current.pop()

    yield from rec(0)


def apply_chain(tau_full: FullPermutation | Sequence[int], chain: Iterable) -> tuple[int, ...]:
    """Right-multiply tau by the transpositions of the chain, i.e. swap the
    letters in positions x and y for every element.  Chain elements commute,
    so the order does not matter."""
    word = list(tau_full.word if isinstance(tau_full, FullPermutation) else tau_full)
    for x, y in chain:
        word[x - 1], word[y - 1] = word[y - 1], word[x - 1]
    return tuple(word)


def _coset_leq(word: Sequence[int], d: int, upper: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(sorted(word[:d]), upper))


def s1_check_naive(S, inst: Instance) -> bool:
    """Every chain from the support of S keeps tau * chain below w."""
    pts = _support(S)
    for p in pts:
        if not (1 <= p.x <= inst.d < p.y <= inst.n):
            raise ValueError(f"{p} is not a reflection for n={inst.n}, d={inst.d}")
    tau = expand_minimal(inst.tau)
    w = inst.w.entries
    return all(_coset_leq(apply_chain(tau, c), inst.d, w) for c in iter_chains(pts))


def longest_chain_in_region(S, r: Region) -> int:
    # sorting by (x, y) ascending makes any strictly y-decreasing
    # subsequence automatically strictly x-increasing
    ys = [-p.y for p in _support(S) if p in r]
    tails: list[int] = []
    for v in ys:
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def chain_bounds(inst: Instance) -> list[int]:
    return [inst.d - k - q for q, k in enumerate(inst.kappa, start=1)]


def chain_condition(S, inst: Instance) -> bool:
    pts = _support(S)
    return all(
        longest_chain_in_region(pts, Region(e)) <= bound
        for e, bound in zip(inst.ends, chain_bounds(inst))
    )


S1Check = Callable[[object, Instance], bool]


def s2_check(S, inst: Instance, s1: S1Check = chain_condition) -> bool:
    """S is maximal among sets with the chain property."""
    if isinstance(S, ReflectionMultiset):
        if any(c != 1 for _, c in S.counts):
            raise ValueError("maximality is defined for sets, not multisets")
        pts = set(S.support())
    else:
        pts = {GridPoint(*p) for p in S}
    if not s1(pts, inst):
        raise ValueError(f"{sorted(pts)} does not satisfy the chain property")
    return all(p in pts or not s1(pts | {p}, inst) for p in inst.rectangle())


def path_point_union(inst: Instance) -> list[GridPoint]:
    """Points above row d lying on at least one nonintersecting family."""
    from .paths import iter_families

    seen: set[GridPoint] = set()
    for f in iter_families(inst):
        seen.update(q for p in f.paths for q in p.points if q.y > inst.d)
    return sorted(seen)


def enumerate_s1s2_sets(
    inst: Instance,
    s1: S1Check = chain_condition,
    candidates: Sequence[GridPoint] | None = None,
) -> list[ReflectionMultiset]:
    """All maximal sets with the chain property.

    Subsets of ``candidates`` (default: the whole rectangle) are searched by
    include/exclude backtracking; since the property is closed under taking
    subsets, a branch dies as soon as an included point breaks it.
    Maximality is always judged against the whole rectangle.
    """
    rect = inst.rectangle()
    cand = sorted(rect if candidates is None else {GridPoint(*p) for p in candidates})
    found = []
    chosen: set[GridPoint] = set()

    def rec(k):
        if k == len(cand):
            if all(p in chosen or not s1(chosen | {p}, inst) for p in rect):
                found.append(ReflectionMultiset.of(chosen))
            return
        p = cand[k]
        if s1(chosen | {p}, inst):
            chosen.add(p)
            rec(k + 1)
            chosen.remove(p)
        rec(k + 1)

    rec(0)
    return found
