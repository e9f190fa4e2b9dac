"""Simple modules of ``GL_n(q)`` in its own characteristic, counted by admissible pairs.

A pair is ``(theta, I)``: ``theta`` is a character of the diagonal torus,
written as ``n`` residues mod ``q - 1``, and ``I`` is a set of simple
reflections ``s_i`` on which ``theta`` is trivial.  For ``GL_n`` the torus of
``s_i`` is ``diag(.., a, a^-1, ..)`` in slots ``i, i+1``, so ``theta`` is
trivial there exactly when ``theta_i = theta_{i+1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from sympy import factorint

from .config import BoundExceeded

MAX_TORUS_CHARACTERS = 10**6


@dataclass(frozen=True)
class AdmissiblePair:
    n: int
    q: int
    theta: tuple[int, ...]
    I: frozenset[int]

    def __post_init__(self) -> None:
        if len(self.theta) != self.n or any(not 0 <= t < self.q - 1 for t in self.theta):
            raise ValueError(f"theta must be {self.n} residues mod {self.q - 1}")
        if not self.I <= stabilizer_set(self.theta):
            raise ValueError(f"I={sorted(self.I)} is not inside S_theta={sorted(stabilizer_set(self.theta))}")

    def to_dict(self) -> dict:
        return {"theta": list(self.theta), "I": sorted(self.I)}


def _check(n: int, q: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if q < 2 or len(factorint(q)) != 1:
        raise ValueError(f"q={q} is not a prime power")
    if (q - 1) ** n > MAX_TORUS_CHARACTERS:
        raise BoundExceeded(f"(q-1)^n = {(q - 1) ** n} torus characters is too many to enumerate")


def stabilizer_set(theta: tuple[int, ...]) -> frozenset[int]:
    """``S_theta``: the 1-based ``i`` with ``theta_i = theta_{i+1}``."""
    return frozenset(i + 1 for i in range(len(theta) - 1) if theta[i] == theta[i + 1])


def _subsets(s: frozenset[int]) -> Iterator[frozenset[int]]:
    items = sorted(s)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def enumerate_admissible_pairs(n: int, q: int) -> list[AdmissiblePair]:
    _check(n, q)
    return [
        AdmissiblePair(n, q, theta, I)
        for theta in itertools.product(range(q - 1), repeat=n)
        for I in _subsets(stabilizer_set(theta))
    ]


def levi_blocks(n: int, I: frozenset[int]) -> list[range]:
    """Index blocks (0-based) of the standard Levi ``L_I``: ``i`` and ``i+1`` share a block iff ``i`` is in ``I``."""
    blocks, start = [], 0
    for i in range(1, n):
        if i not in I:
            blocks.append(range(start, i))
            start = i
    blocks.append(range(start, n))
    return blocks


def _weight_side_count(n: int, q: int) -> int:
    # for each parabolic U_I, torus characters of L_I constant along each GL block of L_I
    total = 0
    for I in _subsets(frozenset(range(1, n))):
        blocks = levi_blocks(n, I)
        for values in itertools.product(range(q - 1), repeat=len(blocks)):
            theta = [0] * n
            for block, v in zip(blocks, values):
                for i in block:
                    theta[i] = v
            assert I <= stabilizer_set(tuple(theta))
            total += 1
    return total


def alperin_weight_count(n: int, q: int) -> tuple[int, int]:
    """``(simple-module count, weight count)``, each by its own enumeration."""
    _check(n, q)
    return len(enumerate_admissible_pairs(n, q)), _weight_side_count(n, q)


def steinberg_count(n: int, q: int) -> int:
    """Pairs with ``I = S``, i.e. projective simple modules; these are the constant ``theta``."""
    _check(n, q)
    full = frozenset(range(1, n))
    return sum(1 for pair in enumerate_admissible_pairs(n, q) if pair.I == full)


def closed_form_count(n: int, q: int) -> int:
    return (q - 1) * q ** (n - 1)
