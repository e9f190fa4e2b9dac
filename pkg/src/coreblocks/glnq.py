"""Unipotent combinatorics of ``GL_n(q)``.

Orders of tori and of ``GL_n`` are kept as products of cyclotomic
polynomials in ``q``.  Unipotent characters are labelled by partitions of
``n``; the ``d``-series containing ``chi_lambda`` is determined by the
``d``-core of ``lambda``, and with ``d`` the order of ``q`` mod ``ell`` these
series are the unipotent ``ell``-blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from sympy import isprime

from .partitions import Partition, d_core, enumerate_partitions, hooks_of_length, multipartition_count, remove_hook

SMALL_ELL_WARNING = "outside-theorem-hypotheses: ell < 7"


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of ``phi_m``, constant term first.

    ``x^m - 1`` divided exactly by ``phi_e`` for every proper divisor ``e``.
    """
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            num = _exact_div(num, list(cyclotomic_poly(e)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        for j, b in enumerate(den):
            num[i + j] -= c * b
    assert not any(num), "division was not exact"
    return out


def eval_poly(coeffs: tuple[int, ...], q: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


def phi(m: int, q: int) -> int:
    return eval_poly(cyclotomic_poly(m), q)


@dataclass(frozen=True)
class CyclotomicProduct:
    """``x^monomial_power * prod phi_d(x)^m_d``; factors are stored as sorted ``(d, m_d)`` pairs."""

    monomial_power: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.monomial_power < 0:
            raise ValueError("monomial power must be non-negative")
        merged: dict[int, int] = {}
        for d, m in self.factors:
            if d < 1 or m < 0:
                raise ValueError(f"bad factor phi_{d}^{m}")
            merged[d] = merged.get(d, 0) + m
        object.__setattr__(self, "factors", tuple(sorted((d, m) for d, m in merged.items() if m)))

    @classmethod
    def from_mapping(cls, factors: Mapping[int, int], monomial_power: int = 0) -> "CyclotomicProduct":
        return cls(monomial_power, tuple(factors.items()))

    def exponent(self, d: int) -> int:
        return dict(self.factors).get(d, 0)

    def __mul__(self, other: "CyclotomicProduct") -> "CyclotomicProduct":
        return CyclotomicProduct(self.monomial_power + other.monomial_power, self.factors + other.factors)

    def evaluate(self, q: int) -> int:
        value = q**self.monomial_power
        for d, m in self.factors:
            value *= phi(d, q) ** m
        return value

    def __str__(self) -> str:
        pieces = []
        if self.monomial_power:
            pieces.append(f"x^{self.monomial_power}")
        pieces += [f"phi{d}" + (f"^{m}" if m > 1 else "") for d, m in self.factors]
        return "*".join(pieces) or "1"

    def to_dict(self) -> dict:
        return {"monomial_power": self.monomial_power, "factors": {str(d): m for d, m in self.factors}}


ONE = CyclotomicProduct()


def cyclotomic_factor(m: int) -> CyclotomicProduct:
    """``x^m - 1`` as the product of ``phi_e`` over the divisors ``e`` of ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    return CyclotomicProduct(0, tuple((e, 1) for e in range(1, m + 1) if m % e == 0))


def torus_poly_order(lam: Partition) -> CyclotomicProduct:
    out = ONE
    for part in lam.parts:
        out = out * cyclotomic_factor(part)
    return out


def gl_poly_order(n: int) -> CyclotomicProduct:
    """``|GL_n(q)| = q^(n(n-1)/2) prod_{i<=n} (q^i - 1)``; ``GL_0`` is trivial."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = CyclotomicProduct(n * (n - 1) // 2)
    for i in range(1, n + 1):
        out = out * cyclotomic_factor(i)
    return out


def valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    x, v = abs(x), 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _check_prime(ell: int) -> None:
    if not isprime(ell):
        raise ValueError(f"{ell} is not prime")


def mult_order(q: int, ell: int, self_test: bool = True) -> int:
    """Least ``d >= 1`` with ``q^d = 1 mod ell``.

    With ``self_test`` it also confirms that ``ell | phi_m(q)`` exactly when
    ``m`` divided by its ``ell``-part equals ``d``, for ``m <= 30``.
    """
    _check_prime(ell)
    if q < 2:
        raise ValueError("q must be at least 2")
    if q % ell == 0:
        raise ValueError(f"ell={ell} divides q={q}")
    d, x = 1, q % ell
    while x != 1:
        x = x * q % ell
        d += 1
    if self_test:
        for m in range(1, 31):
            prime_to_ell = m
            while prime_to_ell % ell == 0:
                prime_to_ell //= ell
            if (phi(m, q) % ell == 0) != (prime_to_ell == d):
                raise ArithmeticError(f"divisibility of phi_{m}({q}) by {ell} contradicts order {d}")
    return d


@dataclass(frozen=True)
class UnipotentChar:
    n: int
    label: Partition


def unipotent_characters(n: int) -> list[UnipotentChar]:
    return [UnipotentChar(n, lam) for lam in enumerate_partitions(n)]


@dataclass(frozen=True)
class DSeries:
    d: int
    cuspidal_core: Partition
    weight: int
    members: tuple[Partition, ...]
    levi_shape: tuple[int, int, int] = field(default=(0, 0, 0))

    @property
    def n(self) -> int:
        return self.cuspidal_core.size + self.weight * self.d

    def to_dict(self) -> dict:
        return {
            "core": str(self.cuspidal_core),
            "weight": self.weight,
            "members": [str(lam) for lam in self.members],
            "levi_shape": list(self.levi_shape),
        }


def d_series_partition(n: int, d: int) -> list[DSeries]:
    """Unipotent characters of ``GL_n(q)`` grouped by ``d``-core, in order of first appearance."""
    if d < 1:
        raise ValueError("d must be positive")
    groups: dict[Partition, list[Partition]] = {}
    weights: dict[Partition, int] = {}
    for lam in enumerate_partitions(n):
        cq = d_core(lam, d)
        groups.setdefault(cq.core, []).append(lam)
        weights[cq.core] = cq.weight
    return [
        DSeries(d, core, weights[core], tuple(members), (n - weights[core] * d, d, weights[core]))
        for core, members in groups.items()
    ]


def series_size_via_relative_weyl(d: int, w: int) -> int:
    """Irreducible characters of ``Z/d wr S_w``, i.e. ``d``-multipartitions of ``w``."""
    if d < 1 or w < 0:
        raise ValueError("need d >= 1 and w >= 0")
    return multipartition_count(d, w)


def lusztig_restriction(lam: Partition, d: int) -> dict[Partition, int]:
    """Signed sum over ``d``-hooks: ``chi_lambda -> sum (-1)^height chi_(lambda - hook)``."""
    out: dict[Partition, int] = {}
    for hook in hooks_of_length(lam, d):
        mu = remove_hook(lam, hook)
        out[mu] = out.get(mu, 0) + (-1) ** hook.height
    return {mu: c for mu, c in out.items() if c}


def restrict_combination(combo: Mapping[Partition, int], d: int) -> dict[Partition, int]:
    """Linear extension of :func:`lusztig_restriction`."""
    out: dict[Partition, int] = {}
    for lam, c in combo.items():
        for mu, e in lusztig_restriction(lam, d).items():
            out[mu] = out.get(mu, 0) + c * e
    return {mu: c for mu, c in out.items() if c}


def iterated_restriction(lam: Partition, d: int, times: int) -> dict[Partition, int]:
    combo: dict[Partition, int] = {lam: 1}
    for _ in range(times):
        combo = restrict_combination(combo, d)
    return combo


@dataclass(frozen=True)
class GLBlockDescriptor:
    n: int
    q: int
    ell: int
    d: int
    series: DSeries
    defect_valuation: int
    defect_group_label: str
    warning: str | None = None

    @property
    def weight(self) -> int:
        return self.series.weight

    @property
    def core(self) -> Partition:
        return self.series.cuspidal_core

    @property
    def members(self) -> tuple[Partition, ...]:
        return self.series.members

    def to_dict(self) -> dict:
        out = {
            "core": str(self.core),
            "weight": self.weight,
            "members": [str(lam) for lam in self.series.members],
            "defect": self.defect_valuation,
            "defect_group": self.defect_group_label,
        }
        if self.warning:
            out["warning"] = self.warning
        return out


def defect_shape_order(n: int, d: int, w: int) -> CyclotomicProduct:
    """Polynomial order of ``GL_{wd} x GL_1``, or of ``GL_{wd}`` when ``wd = n``."""
    order = gl_poly_order(w * d)
    if n - w * d >= 1:
        order = order * gl_poly_order(1)
    return order


def unipotent_blocks_gl(n: int, q: int, ell: int) -> list[GLBlockDescriptor]:
    if n < 1:
        raise ValueError("n must be positive")
    d = mult_order(q, ell)
    warning = SMALL_ELL_WARNING if ell < 7 else None
    out = []
    for series in d_series_partition(n, d):
        wd = series.weight * d
        defect = valuation(defect_shape_order(n, d, series.weight).evaluate(q), ell)
        shape = f"GL_{wd}({q})" + (f"*GL_1({q})" if n - wd >= 1 else "")
        out.append(GLBlockDescriptor(n, q, ell, d, series, defect, f"Sylow_{ell}({shape})", warning))
    return out


def sylow_phi_d_torus(n: int, d: int) -> tuple[int, tuple[int, int, int]]:
    """Copies ``m = n // d`` of the ``phi_d``-torus and the Levi shape ``(n - md, d, m)``."""
    if d < 1 or d > n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    m = n // d
    exponent = gl_poly_order(n).exponent(d)
    if exponent != m:
        raise ArithmeticError(f"phi_{d} exponent {exponent} of |GL_{n}| differs from {m}")
    return m, (n - m * d, d, m)

