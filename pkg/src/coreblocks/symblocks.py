"""ℓ-blocks of symmetric groups.

Blocks are classified by ℓ-cores (Brauer-Robinson).  Everything that needs
the group algebra works on explicit permutations, so those routines are
bounded by ``Limits.group_max_n``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence, Union

from sympy import isprime

from .config import BoundExceeded, limits
from .partitions import Partition, d_core, enumerate_partitions, is_d_core
from .perms import (
    Perm,
    PermutationGroupSpec,
    closure,
    compose,
    conjugate_by,
    cycle_type_of,
    from_cycles,
    identity,
    inverse,
    symmetric_group,
)
from .symchars import CharTable, character_table

Scalar = Union[Fraction, int]


def _check_prime(ell: int) -> None:
    if not isprime(ell):
        raise ValueError(f"{ell} is not prime")


def valuation(x: int, p: int) -> int:
    """p-adic valuation of a non-zero integer."""
    if x == 0:
        raise ValueError("valuation of zero")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def defect_valuation(w: int, ell: int) -> int:
    """``v_ell((w*ell)!)`` by Legendre's formula."""
    m = w * ell
    total, power = 0, ell
    while power <= m:
        total += m // power
        power *= ell
    return total


@dataclass(frozen=True)
class BlockDescriptor:
    n: int
    ell: int
    core: Partition
    weight: int
    members: tuple[Partition, ...]
    defect_valuation: int
    abelian_defect: bool

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def defect_group_label(self) -> str:
        return f"Sylow_{self.ell}(S_{self.weight * self.ell})"

    def to_dict(self) -> dict:
        return {
            "core": str(self.core),
            "weight": self.weight,
            "defect": self.defect_valuation,
            "abelian": self.abelian_defect,
            "members": [str(m) for m in self.members],
            "k": self.k,
        }


@lru_cache(maxsize=None)
def blocks(n: int, ell: int) -> tuple[BlockDescriptor, ...]:
    """Blocks of ``S_n`` in order of first appearance among the partitions of ``n``."""
    _check_prime(ell)
    if n < 1:
        raise ValueError("n must be positive")
    grouped: dict[Partition, list[Partition]] = {}
    for lam in enumerate_partitions(n):
        grouped.setdefault(d_core(lam, ell).core, []).append(lam)
    out = []
    for core, members in grouped.items():
        w = (n - core.size) // ell
        out.append(
            BlockDescriptor(
                n=n,
                ell=ell,
                core=core,
                weight=w,
                members=tuple(members),
                defect_valuation=defect_valuation(w, ell),
                abelian_defect=w < ell,
            )
        )
    return tuple(out)


def block_of(lam: Partition, ell: int) -> BlockDescriptor:
    core = d_core(lam, ell).core
    return next(b for b in blocks(lam.size, ell) if b.core == core)


def heights(block: BlockDescriptor, table: CharTable) -> dict[Partition, int]:
    if table.n != block.n:
        raise ValueError(f"table is for n={table.n}, block for n={block.n}")
    vals = {lam: valuation(table.degree(lam), block.ell) for lam in block.members}
    low = min(vals.values())
    return {lam: v - low for lam, v in vals.items()}


def bhzc_check(n: int, ell: int) -> bool:
    """Abelian defect (``w < ell``) exactly when all heights in the block vanish."""
    table = character_table(n)
    return all((b.weight < ell) == (max(heights(b, table).values()) == 0) for b in blocks(n, ell))


def defect_zero_blocks(n: int, ell: int) -> list[Partition]:
    _check_prime(ell)
    return [lam for lam in enumerate_partitions(n) if is_d_core(lam, ell)]


def central_character(lam: Partition, mu: Partition, table: CharTable) -> int:
    """``|class(mu)| * zeta_lam(mu) / zeta_lam(1)``; always an integer."""
    c = next(c for c in table.classes if c.partition == mu)
    value = Fraction(c.class_size * table.value(lam, mu), table.degree(lam))
    if value.denominator != 1:
        raise ArithmeticError(f"central character of {lam} at {mu} is not integral: {value}")
    return int(value)


def blocks_via_central_characters(n: int, ell: int) -> list[tuple[Partition, ...]]:
    """Group characters whose central characters agree mod ``ell`` on every class."""
    _check_prime(ell)
    table = character_table(n)
    grouped: dict[tuple[int, ...], list[Partition]] = {}
    for lam in table.characters:
        key = tuple(central_character(lam, c.partition, table) % ell for c in table.classes)
        grouped.setdefault(key, []).append(lam)
    return [tuple(v) for v in grouped.values()]


# --- defect groups ---------------------------------------------------------


def sylow_generators(m: int, ell: int) -> list[Perm]:
    """Generators of a Sylow ``ell``-subgroup of ``S_m`` (iterated wreath products on base-ell blocks)."""
    gens: list[Perm] = []
    offset = 0
    digits = []
    x = m
    while x:
        digits.append(x % ell)
        x //= ell
    for j in range(len(digits) - 1, -1, -1):
        size = ell**j
        for _ in range(digits[j]):
            gens.extend(_wreath_generators(m, offset, j, ell))
            offset += size
    return gens


def _wreath_generators(m: int, offset: int, j: int, ell: int) -> list[Perm]:
    if j == 0:
        return []
    sub = ell ** (j - 1)
    gens = _wreath_generators(m, offset, j - 1, ell)
    # cycle the ell sub-blocks of size ell^(j-1)
    img = list(range(m))
    for block in range(ell):
        for t in range(sub):
            src = offset + block * sub + t
            dst = offset + ((block + 1) % ell) * sub + t
            img[src] = dst
    gens.append(tuple(img))
    return gens


@dataclass(frozen=True)
class DefectGroup:
    valuation: int
    label: str
    generators: tuple[Perm, ...] | None


def defect_group(block: BlockDescriptor) -> DefectGroup:
    m = block.weight * block.ell
    gens = tuple(sylow_generators(m, block.ell)) if m <= 9 else None
    return DefectGroup(block.defect_valuation, block.defect_group_label, gens)


# --- group algebra -----------------------------------------------------------


@dataclass(frozen=True)
class CentralElement:
    """Sparse element of the group algebra of ``S_n``.

    ``field`` is ``"rational"`` or a prime; zero coefficients are never stored.
    """

    n: int
    field: Union[str, int]
    coefficients: Mapping[Perm, Scalar]

    def __post_init__(self) -> None:
        if self.field != "rational" and not (isinstance(self.field, int) and isprime(self.field)):
            raise ValueError(f"field must be 'rational' or a prime, got {self.field!r}")
        cleaned = {}
        for g, c in self.coefficients.items():
            if self.field != "rational":
                c = int(c) % self.field
            if c:
                cleaned[tuple(g)] = c
        object.__setattr__(self, "coefficients", cleaned)

    def __getitem__(self, g: Perm) -> Scalar:
        return self.coefficients.get(g, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CentralElement):
            return NotImplemented
        return (self.n, self.field, self.coefficients) == (other.n, other.field, other.coefficients)

    def __hash__(self) -> int:
        return hash((self.n, self.field, frozenset(self.coefficients.items())))

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_central_in(self, generators: Sequence[Perm]) -> bool:
        """Invariance under conjugation by each generator of a group."""
        return all(self[conjugate_by(g, x)] == c for g, c in self.coefficients.items() for x in generators)

    def reduce_mod(self, ell: int) -> "CentralElement":
        if self.field != "rational":
            raise ValueError("already over a prime field")
        out = {}
        for g, c in self.coefficients.items():
            c = Fraction(c)
            if c.denominator % ell == 0:
                raise ArithmeticError(f"coefficient {c} is not {ell}-integral")
            out[g] = c.numerator * pow(c.denominator, -1, ell) % ell
        return CentralElement(self.n, ell, out)

    def to_dict(self) -> dict:
        from .perms import format_cycles

        return {
            "n": self.n,
            "field": self.field,
            "coefficients": {format_cycles(g): _fmt(c) for g, c in sorted(self.coefficients.items())},
        }


def _fmt(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _add(field: Union[str, int], a: Scalar, b: Scalar) -> Scalar:
    return a + b if field == "rational" else (a + b) % field


def multiply(a: CentralElement, b: CentralElement) -> CentralElement:
    """Full group-algebra product (quadratic in the supports)."""
    if (a.n, a.field) != (b.n, b.field):
        raise ValueError("operands live in different algebras")
    out: dict[Perm, Scalar] = defaultdict(int)
    for g, x in a.coefficients.items():
        for h, y in b.coefficients.items():
            gh = compose(g, h)
            out[gh] = _add(a.field, out[gh], x * y)
    return CentralElement(a.n, a.field, out)


@lru_cache(maxsize=8)
def _class_index(n: int) -> tuple[dict[Perm, Partition], dict[Partition, Perm]]:
    of = {}
    reps = {}
    for g in symmetric_group(n):
        mu = cycle_type_of(g)
        of[g] = mu
        reps.setdefault(mu, g)
    return of, reps


def multiply_central(a: CentralElement, b: CentralElement) -> CentralElement:
    """Product of two class functions, evaluated once per conjugacy class of ``S_n``."""
    if (a.n, a.field) != (b.n, b.field):
        raise ValueError("operands live in different algebras")
    of, reps = _class_index(a.n)
    values = {}
    for mu, g in reps.items():
        total: Scalar = 0
        for h, x in a.coefficients.items():
            y = b[compose(inverse(h), g)]
            if y:
                total = _add(a.field, total, x * y)
        values[mu] = total
    return CentralElement(a.n, a.field, {g: values[mu] for g, mu in of.items()})


def unit(n: int, field: Union[str, int] = "rational") -> CentralElement:
    return CentralElement(n, field, {identity(n): 1})


def _check_group_bound(n: int) -> None:
    bound = limits().group_max_n
    if n > bound:
        raise BoundExceeded(f"group-algebra computations are limited to n <= {bound}")


def block_idempotent(block: BlockDescriptor, table: CharTable | None = None) -> CentralElement:
    """Sum of ``e_chi = chi(1)/n! * sum chi(g^-1) g`` over the block's characters."""
    n = block.n
    _check_group_bound(n)
    if table is None:
        table = character_table(n)
    if table.n != n:
        raise ValueError("table does not match block")
    order = math.factorial(n)
    per_class = {}
    for c in table.classes:
        per_class[c.partition] = Fraction(
            sum(table.degree(lam) * table.value(lam, c.partition) for lam in block.members), order
        )
    of, _ = _class_index(n)
    return CentralElement(n, "rational", {g: per_class[mu] for g, mu in of.items()})


def is_ell_group(group: PermutationGroupSpec, ell: int) -> bool:
    size = group.order
    while size % ell == 0:
        size //= ell
    return size == 1


def brauer_morphism(c: CentralElement, group: PermutationGroupSpec) -> CentralElement:
    """Truncate ``c`` to the centralizer of ``group`` in ``S_n``."""
    if c.field == "rational":
        raise ValueError("the Brauer morphism is taken over a prime field; reduce first")
    if group.n != c.n:
        raise ValueError("degree mismatch")
    if not is_ell_group(group, c.field):
        raise ValueError(f"subgroup of order {group.order} is not a {c.field}-group")
    gens = group.generators
    kept = {g: v for g, v in c.coefficients.items() if all(compose(g, x) == compose(x, g) for x in gens)}
    return CentralElement(c.n, c.field, kept)


def ell_cycle_subgroups(n: int, ell: int) -> Iterator[PermutationGroupSpec]:
    """Every subgroup of ``S_n`` generated by pairwise disjoint ``ell``-cycles (trivial group included)."""
    _check_prime(ell)

    def supports(points: tuple[int, ...], k: int) -> Iterator[list[tuple[int, ...]]]:
        if k == 0:
            yield []
            return
        for i, first in enumerate(points):
            rest = points[i + 1 :]
            for others in itertools.combinations(rest, ell - 1):
                remaining = tuple(p for p in rest if p not in others)
                for tail in supports(remaining, k - 1):
                    yield [(first,) + others] + tail

    def cyclic_choices(support: tuple[int, ...]) -> list[Perm]:
        seen = set()
        out = []
        first, others = support[0], support[1:]
        for arrangement in itertools.permutations(others):
            g = from_cycles(n, [(first,) + arrangement])
            group = closure(n, [g])
            if group not in seen:
                seen.add(group)
                out.append(g)
        return out

    points = tuple(range(1, n + 1))
    for k in range(n // ell + 1):
        for sup in supports(points, k):
            for gens in itertools.product(*(cyclic_choices(s) for s in sup)):
                yield PermutationGroupSpec(n, tuple(gens))


def _embed(small: CentralElement, n: int, points: Sequence[int]) -> dict[Perm, Scalar]:
    """Push an element of ``S_m`` onto the (1-based) ``points`` of ``S_n``."""
    out = {}
    for sigma, v in small.coefficients.items():
        img = list(range(n))
        for i, s in enumerate(sigma):
            img[points[i] - 1] = points[s] - 1
        out[tuple(img)] = v
    return out


def expected_brauer_image(block: BlockDescriptor, group: PermutationGroupSpec) -> CentralElement:
    """``b_kappa^(n_P) (x) 1`` if ``n_P >= |kappa|``, else zero."""
    ell = block.ell
    fixed = group.fixed_points
    n_p = len(fixed)
    if n_p < block.core.size:
        return CentralElement(block.n, ell, {})
    if n_p == 0:
        return unit(block.n, ell)
    small = next(b for b in blocks(n_p, ell) if b.core == block.core)
    small_idem = block_idempotent(small).reduce_mod(ell)
    return CentralElement(block.n, ell, _embed(small_idem, block.n, fixed))


def brauer_formula_holds(n: int, ell: int, subgroups: Sequence[PermutationGroupSpec] | None = None) -> bool:
    """Compare every ``Br_P(b_kappa)`` with the closed formula, over ``P`` generated by disjoint ``ell``-cycles."""
    _check_group_bound(n)
    if subgroups is None:
        subgroups = list(ell_cycle_subgroups(n, ell))
    for block in blocks(n, ell):
        b = block_idempotent(block).reduce_mod(ell)
        for group in subgroups:
            if brauer_morphism(b, group) != expected_brauer_image(block, group):
                return False
    return True
