"""Ordinary characters of symmetric groups via the Murnaghan-Nakayama rule."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .config import BoundExceeded, limits
from .partitions import (
    Partition,
    d_core,
    enumerate_partitions,
    hooks_of_length,
    remove_hook,
    removal_path_count,
)


@dataclass(frozen=True)
class CycleType:
    partition: Partition
    class_size: int
    order_lcm: int

    @property
    def n(self) -> int:
        return self.partition.size

    def is_ell_regular(self, ell: int) -> bool:
        return all(p % ell for p in self.partition)

    def __str__(self) -> str:
        return str(self.partition)


def centralizer_order(mu: Partition) -> int:
    """``z_mu = prod k^{m_k} m_k!``."""
    z = 1
    for k, m in Counter(mu.parts).items():
        z *= k**m * math.factorial(m)
    return z


def cycle_type(mu: Partition) -> CycleType:
    return CycleType(
        partition=mu,
        class_size=math.factorial(mu.size) // centralizer_order(mu),
        order_lcm=math.lcm(*mu.parts) if mu.parts else 1,
    )


def conjugacy_classes(n: int) -> list[CycleType]:
    if n < 1:
        raise ValueError("n must be positive")
    return [cycle_type(mu) for mu in enumerate_partitions(n)]


@lru_cache(maxsize=None)
def _mn(lam: Partition, rest: tuple[int, ...]) -> int:
    # rest is sorted decreasingly; strip its largest part
    if not rest:
        return 1
    d, tail = rest[0], rest[1:]
    total = 0
    for h in hooks_of_length(lam, d):
        value = _mn(remove_hook(lam, h), tail)
        total += -value if h.height % 2 else value
    return total


def mn_value(lam: Partition, mu: Partition | CycleType) -> int:
    """``zeta_lam`` on the class of cycle type ``mu``."""
    if isinstance(mu, CycleType):
        mu = mu.partition
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    return _mn(lam, mu.parts)


def iterated_mn_value(lam: Partition, d: int, w: int, rest: Partition | CycleType, strict: bool = False) -> int:
    """``zeta_lam`` on ``x' c_1 ... c_w`` with ``c_i`` disjoint ``d``-cycles and ``x'`` of type ``rest``.

    When ``w`` is the full ``d``-weight the value is ``sign * N * zeta_core(x')``.
    Other ``w`` fall back to summing over length-``w`` removal paths, unless
    ``strict`` is set, in which case they raise.
    """
    if isinstance(rest, CycleType):
        rest = rest.partition
    if lam.size != rest.size + w * d:
        raise ValueError(f"size mismatch: |{lam}| != |{rest}| + {w}*{d}")
    cq = d_core(lam, d)
    if w == cq.weight:
        return cq.sign * removal_path_count(lam, d) * mn_value(cq.core, rest)
    if strict:
        raise ValueError(f"w={w} is not the {d}-weight {cq.weight} of {lam}")
    return _partial_strip(lam, d, w, rest)


def _partial_strip(lam: Partition, d: int, w: int, rest: Partition) -> int:
    if w == 0:
        return mn_value(lam, rest)
    total = 0
    for h in hooks_of_length(lam, d):
        value = _partial_strip(remove_hook(lam, h), d, w - 1, rest)
        total += -value if h.height % 2 else value
    return total


@dataclass(frozen=True)
class CharTable:
    n: int
    characters: tuple[Partition, ...]
    classes: tuple[CycleType, ...]
    values: tuple[tuple[int, ...], ...]

    def value(self, lam: Partition, mu: Partition) -> int:
        i = self.characters.index(lam)
        j = next(k for k, c in enumerate(self.classes) if c.partition == mu)
        return self.values[i][j]

    def degree(self, lam: Partition) -> int:
        return self.value(lam, Partition((1,) * self.n))

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.characters.index(lam)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "characters": [str(lam) for lam in self.characters],
            "classes": [{"type": str(c.partition), "size": str(c.class_size)} for c in self.classes],
            "values": [[str(v) for v in row] for row in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CharTable":
        classes = tuple(cycle_type(Partition.parse(c["type"])) for c in data["classes"])
        for c, raw in zip(classes, data["classes"]):
            if str(c.class_size) != raw["size"]:
                raise ValueError(f"class size mismatch for {c}")
        return cls(
            n=data["n"],
            characters=tuple(Partition.parse(s) for s in data["characters"]),
            classes=classes,
            values=tuple(tuple(int(v) for v in row) for row in data["values"]),
        )


@lru_cache(maxsize=32)
def character_table(n: int) -> CharTable:
    bound = limits().chartable_max_n
    if n > bound:
        raise BoundExceeded(f"character tables are limited to n <= {bound}")
    classes = tuple(conjugacy_classes(n))
    chars = tuple(enumerate_partitions(n))
    values = tuple(tuple(mn_value(lam, c.partition) for c in classes) for lam in chars)
    return CharTable(n=n, characters=chars, classes=classes, values=values)


def row_orthogonality_holds(table: CharTable) -> bool:
    order = math.factorial(table.n)
    sizes = [c.class_size for c in table.classes]
    rows = table.values
    for i, r in enumerate(rows):
        for j in range(i, len(rows)):
            s = sum(k * a * b for k, a, b in zip(sizes, r, rows[j]))
            if s != (order if i == j else 0):
                return False
    return True


def column_orthogonality_holds(table: CharTable) -> bool:
    cols = list(zip(*table.values))
    for i, ci in enumerate(cols):
        z = centralizer_order(table.classes[i].partition)
        for j in range(i, len(cols)):
            s = sum(a * b for a, b in zip(ci, cols[j]))
            if s != (z if i == j else 0):
                return False
    return True


def branching_check(n: int) -> bool:
    """Restriction to ``S_{n-1}`` agrees with summing over removable boxes."""
    if n < 2:
        raise ValueError("n must be at least 2")
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n - 1):
            with_fixed = Partition(tuple(sorted(mu.parts + (1,), reverse=True)))
            direct = mn_value(lam, with_fixed)
            via_boxes = sum((-1) ** h.height * mn_value(remove_hook(lam, h), mu) for h in hooks_of_length(lam, 1))
            if direct != via_boxes:
                return False
    return True
