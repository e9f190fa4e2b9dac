"""Partitions, beta-sets, hooks, cores and quotients.

Hooks are handled through beta-sets throughout: for a partition
``(l_1 >= ... >= l_k)`` and a bead count ``k`` the beta-set is
``{l_i + k - i}``.  A ``d``-hook is a bead ``a`` whose position ``a - d`` is
empty and non-negative; removing the hook slides the bead down, and the hook
height is the number of beads passed over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers.  ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"[4,3,1,1]"``, ``"4,3,1,1"`` or ``"[]"``; unsorted input is rejected."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        body = body.strip()
        if not body or body == "0":
            return cls(())
        return cls(tuple(int(tok) for tok in body.replace(" ", "").split(",")))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def cells(self) -> Iterator[tuple[int, int]]:
        """Diagram cells as 1-based ``(row, column)`` pairs."""
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield i, j

    def hook_length(self, row: int, col: int) -> int:
        conj = conjugate(self)
        return self.parts[row - 1] - col + conj.parts[col - 1] - row + 1


@dataclass(frozen=True)
class BetaSet:
    """Strictly decreasing bead positions."""

    beads: tuple[int, ...]

    def __post_init__(self) -> None:
        beads = tuple(sorted(set(int(b) for b in self.beads), reverse=True))
        if len(beads) != len(self.beads):
            raise ValueError("beads must be distinct")
        if beads and beads[-1] < 0:
            raise ValueError("beads must be non-negative")
        object.__setattr__(self, "beads", beads)

    @property
    def length(self) -> int:
        return len(self.beads)

    def __contains__(self, a: int) -> bool:
        return a in self.beads

    def normalized(self) -> "BetaSet":
        """Strip beads that only encode empty rows (the ``0, 1, ..., j-1`` tail)."""
        beads = list(self.beads)
        shift = 0
        while beads and beads[-1] == shift:
            beads.pop()
            shift += 1
        if not beads:
            return BetaSet(())
        return BetaSet(tuple(b - shift for b in beads))


@dataclass(frozen=True)
class Hook:
    cell: tuple[int, int]
    length: int
    height: int
    beta_move: tuple[int, int]


@dataclass(frozen=True)
class CoreQuotient:
    d: int
    core: Partition
    quotient: tuple[Partition, ...] | None
    sign: int
    weight: int


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def canonical_bead_count(lam: Partition, multiple_of: int = 1) -> int:
    k = max(len(lam), 1)
    return -(-k // multiple_of) * multiple_of


def beta_set(lam: Partition, k: int | None = None) -> BetaSet:
    if k is None:
        k = canonical_bead_count(lam)
    if k < len(lam):
        raise ValueError(f"bead count {k} is below the number of parts {len(lam)}")
    padded = lam.parts + (0,) * (k - len(lam))
    return BetaSet(tuple(p + k - i for i, p in enumerate(padded, start=1)))


def partition_from_beta(beta: BetaSet | Iterable[int]) -> Partition:
    beads = beta.beads if isinstance(beta, BetaSet) else tuple(sorted(set(beta), reverse=True))
    k = len(beads)
    parts = [b - (k - i) for i, b in enumerate(beads, start=1)]
    if any(p < 0 for p in parts):
        raise ValueError(f"not a valid beta-set: {beads}")
    return Partition(tuple(p for p in parts if p > 0))


def _hooks_from_beads(lam: Partition, beads: tuple[int, ...], d: int) -> list[Hook]:
    occupied = set(beads)
    hooks = []
    for row, a in enumerate(beads, start=1):
        b = a - d
        if b < 0 or b in occupied:
            continue
        height = sum(1 for x in beads if b < x < a)
        arm = d - 1 - height
        hooks.append(Hook(cell=(row, lam.parts[row - 1] - arm), length=d, height=height, beta_move=(a, b)))
    return hooks


def hooks_of_length(lam: Partition, d: int) -> list[Hook]:
    """All ``d``-hooks of ``lam``, ordered by decreasing bead (top row first)."""
    if d < 1:
        raise ValueError("hook length must be positive")
    return _hooks_from_beads(lam, beta_set(lam).beads, d)


def remove_hook(lam: Partition, hook: Hook) -> Partition:
    if hook not in hooks_of_length(lam, hook.length):
        raise ValueError(f"{hook} is not a hook of {lam}")
    a, b = hook.beta_move
    beads = [b if x == a else x for x in beta_set(lam).beads]
    return partition_from_beta(beads)


def _bead_mask(parts: Sequence[int]) -> int:
    k = len(parts)
    mask = 0
    for i, p in enumerate(parts):
        mask |= 1 << (p + k - 1 - i)
    return mask


def is_d_core(lam: Partition, d: int) -> bool:
    if d < 1:
        raise ValueError("d must be positive")
    return _is_core_parts(lam.parts, d)


def _is_core_parts(parts: Sequence[int], d: int) -> bool:
    # bead a with a - d >= 0 empty  <=>  bit (a - d) set in mask >> d but not in mask
    mask = _bead_mask(parts)
    return (mask >> d) & ~mask == 0


@lru_cache(maxsize=None)
def _core_and_sign(lam: Partition, d: int) -> tuple[Partition, int]:
    beads = list(beta_set(lam).beads)
    total_height = 0
    while True:
        occupied = set(beads)
        for idx, a in enumerate(beads):
            b = a - d
            if b >= 0 and b not in occupied:
                total_height += sum(1 for x in beads if b < x < a)
                beads[idx] = b
                beads.sort(reverse=True)
                break
        else:
            break
    return partition_from_beta(beads), (-1) ** total_height


def d_core(lam: Partition, d: int) -> CoreQuotient:
    """Core, sign and weight; the sign comes from always removing the top-row hook first."""
    if d < 1:
        raise ValueError("d must be positive")
    core, sign = _core_and_sign(lam, d)
    weight, rem = divmod(lam.size - core.size, d)
    assert rem == 0
    return CoreQuotient(d=d, core=core, quotient=None, sign=sign, weight=weight)


def d_quotient(lam: Partition, d: int) -> CoreQuotient:
    """Core and quotient read off the ``d``-runner abacus with a bead count divisible by ``d``.

    Runner ``i`` holds the beads congruent to ``i`` mod ``d``; its bead levels
    form the beta-set of ``quotient[i]``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    base = d_core(lam, d)
    beads = beta_set(lam, canonical_bead_count(lam, d)).beads
    quotient = []
    for i in range(d):
        levels = [b // d for b in beads if b % d == i]
        quotient.append(partition_from_beta(levels))
    return CoreQuotient(d=d, core=base.core, quotient=tuple(quotient), sign=base.sign, weight=base.weight)


def reconstruct_from_quotient(cq: CoreQuotient) -> Partition:
    d = cq.d
    if cq.quotient is None or len(cq.quotient) != d:
        raise ValueError(f"expected {d} quotient parts")
    if not is_d_core(cq.core, d):
        raise ValueError(f"{cq.core} is not a {d}-core")
    k = canonical_bead_count(cq.core, d)
    while True:
        core_beads = beta_set(cq.core, k).beads
        runner_counts = [sum(1 for b in core_beads if b % d == i) for i in range(d)]
        if all(runner_counts[i] >= len(cq.quotient[i]) for i in range(d)):
            break
        k += d
    beads = []
    for i, (count, part) in enumerate(zip(runner_counts, cq.quotient)):
        beads.extend(level * d + i for level in beta_set(part, count).beads)
    return partition_from_beta(beads)


@lru_cache(maxsize=None)
def removal_path_count(lam: Partition, d: int) -> int:
    """Number of maximal sequences of ``d``-hook removals (memoized on intermediate shapes)."""
    hooks = hooks_of_length(lam, d)
    if not hooks:
        return 1
    return sum(removal_path_count(remove_hook(lam, h), d) for h in hooks)


def removal_paths(lam: Partition, d: int) -> Iterator[list[Hook]]:
    """Every maximal removal sequence; exponential, for small oracles only."""
    hooks = hooks_of_length(lam, d)
    if not hooks:
        yield []
        return
    for h in hooks:
        for rest in removal_paths(remove_hook(lam, h), d):
            yield [h] + rest


def partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as plain tuples, lexicographically decreasing."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        parts[-1] -= 1
        rem = ones + 1
        m = parts[-1]
        while rem >= m:
            parts.append(m)
            rem -= m
        if rem:
            parts.append(rem)


def enumerate_partitions(n: int) -> list[Partition]:
    return [Partition(p) for p in partition_tuples(n)]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def multipartitions(d: int, w: int) -> Iterator[tuple[Partition, ...]]:
    """``d``-tuples of partitions with total size ``w``."""
    if d == 0:
        if w == 0:
            yield ()
        return
    for first in range(w, -1, -1):
        for head in enumerate_partitions(first):
            for tail in multipartitions(d - 1, w - first):
                yield (head,) + tail


def multipartition_count(d: int, w: int) -> int:
    """Coefficient of ``t^w`` in ``prod (1 - t^k)^(-d)``."""
    series = [1] + [0] * w
    for _ in range(d):
        series = [sum(series[j] * partition_count(i - j) for j in range(i + 1)) for i in range(w + 1)]
    return series[w]
