"""Small permutation-group helpers.

Permutations are tuples of images of ``0..n-1``; ``compose(g, h)`` is
``x -> g(h(x))``.  Cycle notation in the public API is 1-based.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import Partition

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(g: Perm, h: Perm) -> Perm:
    return tuple(g[x] for x in h)


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def conjugate_by(g: Perm, x: Perm) -> Perm:
    """``x g x^-1``."""
    return compose(compose(x, g), inverse(x))


def cycles(g: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, 0-based, fixed points included."""
    seen = set()
    out = []
    for start in range(len(g)):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = g[x]
        out.append(tuple(cyc))
    return out


def cycle_type_of(g: Perm) -> Partition:
    return Partition(tuple(sorted((len(c) for c in cycles(g)), reverse=True)))


def from_cycles(n: int, cycle_list: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation from 1-based disjoint cycles."""
    img = list(range(n))
    touched: set[int] = set()
    for cyc in cycle_list:
        pts = [int(x) - 1 for x in cyc]
        if any(p < 0 or p >= n for p in pts):
            raise ValueError(f"cycle {tuple(cyc)} is out of range for degree {n}")
        if touched.intersection(pts) or len(set(pts)) != len(pts):
            raise ValueError("cycles must be disjoint")
        touched.update(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def parse_cycles(n: int, text: str) -> Perm:
    """Parse ``"(2,3,4)(5,6)"`` (commas or spaces inside brackets); ``"()"`` is the identity."""
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups and text.strip():
        raise ValueError(f"cannot parse cycles from {text!r}")
    cycle_list = []
    for g in groups:
        toks = [t for t in re.split(r"[,\s]+", g.strip()) if t]
        if toks:
            cycle_list.append([int(t) for t in toks])
    return from_cycles(n, cycle_list)


def format_cycles(g: Perm) -> str:
    nontrivial = [c for c in cycles(g) if len(c) > 1]
    if not nontrivial:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in nontrivial)


def order(g: Perm) -> int:
    import math

    return math.lcm(*(len(c) for c in cycles(g))) if g else 1


def closure(n: int, generators: Sequence[Perm]) -> frozenset[Perm]:
    """Group generated by ``generators`` (breadth-first)."""
    e = identity(n)
    elements = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


@lru_cache(maxsize=16)
def symmetric_group(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(n)))


def centralizer(n: int, generators: Sequence[Perm], within: Iterable[Perm] | None = None) -> list[Perm]:
    """Elements commuting with every generator (brute force)."""
    pool = symmetric_group(n) if within is None else within
    return [x for x in pool if all(compose(x, g) == compose(g, x) for g in generators)]


@dataclass(frozen=True)
class PermutationGroupSpec:
    n: int
    generators: tuple[Perm, ...]
    elements: frozenset[Perm] = field(init=False, repr=False, compare=False)
    fixed_points: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        gens = tuple(tuple(g) for g in self.generators)
        if any(sorted(g) != list(range(self.n)) for g in gens):
            raise ValueError(f"generators must be permutations of degree {self.n}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "elements", closure(self.n, gens))
        fixed = tuple(i + 1 for i in range(self.n) if all(g[i] == i for g in gens))
        object.__setattr__(self, "fixed_points", fixed)

    @classmethod
    def from_cycle_strings(cls, n: int, gens: Iterable[str]) -> "PermutationGroupSpec":
        return cls(n, tuple(parse_cycles(n, s) for s in gens))

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)
