"""Counting and constructing d-cores.

A ``d``-core on the ``d``-runner abacus is fixed by how many beads sit on
each runner.  With ``d*m`` beads, write ``x_i`` for the bead count of runner
``i - 1`` minus ``m``; then ``sum x_i = 0`` and the core has size
``sum(d/2 * x_i**2 + (i - 1) * x_i)``.  Kiming's argument produces such a
vector with eight non-zero slots for every large ``n`` when ``d >= 9`` is
odd.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from sympy import isprime

from .config import BoundExceeded, limits
from .partitions import Partition, beta_set, canonical_bead_count, is_d_core, partition_from_beta


@dataclass(frozen=True)
class CoreCountSeries:
    d: int
    nmax: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def to_csv(self) -> str:
        lines = [f"n,c_{self.d}(n)"]
        lines += [f"{n},{c}" for n, c in enumerate(self.counts)]
        return "\n".join(lines) + "\n"


def count_cores_genfun(d: int, nmax: int) -> CoreCountSeries:
    """Coefficients of ``prod_{k>=1} (1 - t^{dk})^d / (1 - t^k)`` up to ``t^nmax``."""
    if d < 1:
        raise ValueError("d must be positive")
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    series = [1] + [0] * nmax
    k = 1
    while d * k <= nmax:
        step = d * k
        for _ in range(d):
            for i in range(nmax, step - 1, -1):
                series[i] -= series[i - step]
        k += 1
    for k in range(1, nmax + 1):
        for i in range(k, nmax + 1):
            series[i] += series[i - k]
    return CoreCountSeries(d=d, nmax=nmax, counts=tuple(series))


def bead_masks(n: int) -> Iterator[int]:
    """Bead bitmask of every partition of ``n``, one bead per part.

    Parts are generated smallest first; the ``j``-th smallest part ``a`` puts
    its bead at position ``a + j``, so the mask grows one bit per part.
    """

    def rec(rem: int, lo: int, j: int, mask: int) -> Iterator[int]:
        if rem == 0:
            yield mask
            return
        for a in range(lo, rem // 2 + 1):
            yield from rec(rem - a, a, j + 1, mask | (1 << (a + j)))
        if rem >= lo:
            yield mask | (1 << (rem + j))

    return rec(n, 1, 0, 0)


def core_counts_enum(ds: Iterable[int], n: int) -> dict[int, int]:
    """Exhaustive counts of ``d``-cores of ``n`` for several ``d`` in one pass over the partitions."""
    bound = limits().enum_max_n
    if n > bound:
        raise BoundExceeded(f"exhaustive enumeration is limited to n <= {bound}")
    ds = list(ds)
    counts = dict.fromkeys(ds, 0)
    for mask in bead_masks(n):
        for d in ds:
            if (mask >> d) & ~mask == 0:
                counts[d] += 1
    return counts


def count_cores_enum(d: int, n: int) -> int:
    return core_counts_enum([d], n)[d]


# --- number theory ---------------------------------------------------------------


def factorize(m: int) -> dict[int, int]:
    """Trial division up to the configured bound, then a primality test on the cofactor."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    bound = limits().trial_division_bound
    out: dict[int, int] = {}
    p = 2
    while p * p <= m and p <= bound:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        if p * p > m or isprime(m):
            out[m] = out.get(m, 0) + 1
        else:
            raise BoundExceeded(f"cofactor {m} has no factor below {bound} and is composite")
    return out


def divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m).items():
        divs = [x * p**k for x in divs for k in range(e + 1)]
    return sorted(divs)


def legendre3(m: int) -> int:
    r = m % 3
    return 0 if r == 0 else (1 if r == 1 else -1)


def c3_legendre(n: int) -> int:
    """``c_3(n) = sum over divisors m of 3n+1 of (m/3)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(legendre3(m) for m in divisors(3 * n + 1))


def granville_ono_zero(n: int) -> bool:
    """True iff some prime ``p = 2 mod 3`` divides ``3n+1`` to an odd power."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return any(p % 3 == 2 and e % 2 for p, e in factorize(3 * n + 1).items())


def is_triangular(n: int) -> bool:
    if n < 0:
        return False
    m = math.isqrt(8 * n + 1)
    return m * m == 8 * n + 1


def defect_zero_sym(n: int, ell: int) -> bool:
    """``S_n`` has an ``ell``-block of defect zero iff some ``ell``-core of ``n`` exists."""
    if not isprime(ell):
        raise ValueError(f"{ell} is not prime")
    return count_cores_genfun(ell, n)[n] > 0


def defect_zero_alt(n: int, ell: int) -> bool:
    """Whether the alternating group ``A_n`` (``n >= 5``) has an ``ell``-block of defect zero."""
    if n < 5:
        raise ValueError("alternating groups are considered for n >= 5")
    if not isprime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell == 2:
        # 2-blocks of S_n with defect group 1 or S_2
        return is_triangular(n) or is_triangular(n - 2)
    if ell == 3:
        return not granville_ono_zero(n)
    return defect_zero_sym(n, ell)


# --- quadratic form and abacus -----------------------------------------------------


@dataclass(frozen=True)
class CoreVector:
    d: int
    x: tuple[int, ...]

    def __post_init__(self) -> None:
        x = tuple(int(v) for v in self.x)
        if self.d < 2 or len(x) != self.d:
            raise ValueError(f"need d >= 2 and exactly d={self.d} coordinates, got {len(x)}")
        object.__setattr__(self, "x", x)


def value_of_vector(v: CoreVector) -> int:
    if sum(v.x) != 0:
        raise ValueError(f"coordinates must sum to zero: {v.x}")
    twice = v.d * sum(a * a for a in v.x) + 2 * sum(i * a for i, a in enumerate(v.x))
    assert twice % 2 == 0, v
    return twice // 2


def core_from_vector(v: CoreVector) -> Partition:
    if sum(v.x) != 0:
        raise ValueError(f"coordinates must sum to zero: {v.x}")
    d = v.d
    m = max(0, *(-a for a in v.x))
    beads = [level * d + i for i, a in enumerate(v.x) for level in range(m + a)]
    return partition_from_beta(beads)


def vector_from_core(kappa: Partition, d: int) -> CoreVector:
    if not is_d_core(kappa, d):
        raise ValueError(f"{kappa} is not a {d}-core")
    k = canonical_bead_count(kappa, d)
    beads = beta_set(kappa, k).beads
    m = k // d
    return CoreVector(d, tuple(sum(1 for b in beads if b % d == i) - m for i in range(d)))


def count_core_vectors(d: int, n: int, bound: int | None = None) -> int:
    """Number of zero-sum integer vectors with ``|x_i| <= bound`` representing ``n``."""
    if bound is None:
        # smallest b with d*b^2 >= 2n, plus one
        b = math.isqrt(2 * n // d)
        while d * b * b < 2 * n:
            b += 1
        bound = b + 1
    count = 0
    rng = range(-bound, bound + 1)
    for head in itertools.product(rng, repeat=d - 1):
        last = -sum(head)
        if abs(last) > bound:
            continue
        if value_of_vector(CoreVector(d, head + (last,))) == n:
            count += 1
    return count


# --- Kiming's construction ----------------------------------------------------------


def three_odd_squares(m: int) -> tuple[int, int, int]:
    """Odd ``a >= b >= c >= 1`` with ``a^2 + b^2 + c^2 = m``; ``a`` is searched downwards."""
    if m <= 0 or m % 8 != 3:
        raise ValueError(f"{m} is not a positive integer congruent to 3 mod 8")
    a = math.isqrt(m)
    if a % 2 == 0:
        a -= 1
    while a >= 1:
        rest = m - a * a
        b = min(a, math.isqrt(rest))
        if b % 2 == 0:
            b -= 1
        while b >= 1 and 2 * b * b >= rest:
            c2 = rest - b * b
            c = math.isqrt(c2)
            if c * c == c2 and c % 2 == 1:
                return a, b, c
            b -= 2
        a -= 2
    raise ArithmeticError(f"no representation of {m} as three odd squares found")


@dataclass(frozen=True)
class KimingSolution:
    d: int
    n: int
    q: int
    r: int
    q_prime: int
    r_prime: int
    adjustment: int
    case: str
    r_used: int
    squares: tuple[int, int, int]
    a: int
    b: int
    c: int
    flipped: bool
    alpha: int
    beta: int
    gamma: int
    delta: int
    x: CoreVector

    def to_dict(self) -> dict:
        out = asdict(self)
        out["squares"] = list(self.squares)
        out["x"] = list(self.x.x)
        out["value"] = value_of_vector(self.x)
        out["value_check"] = out["value"] == self.n and sum(self.x.x) == 0
        return out


def kiming_bound_ok(d: int, n: int) -> bool:
    """``n >= d^3/4 + 3d/4 - 1`` in integers."""
    return 4 * n >= d**3 + 3 * d - 4


def _adjust(d: int, q: int, r: int) -> tuple[int, int, int]:
    """Parity fix of the euclidean pair; returns ``(q', r', rule number)``."""
    if q % 2 == 1 and r % 4 != 0:
        return q, r, 1
    if q % 2 == 0 and r % 2 == 0:
        return q + 1, r - d, 2
    if q % 2 == 1 and r % 4 == 0:
        return q + 2, r - 2 * d, 3
    eps = 1 if (r - d) % 4 == 0 else -1
    return q - eps, r + eps * d, 4


def kiming_construct(d: int, n: int) -> KimingSolution:
    if d < 9 or d % 2 == 0:
        raise ValueError("d must be an odd integer >= 9")
    if not kiming_bound_ok(d, n):
        raise ValueError(f"n={n} is below d^3/4 + 3d/4 - 1 for d={d}")
    q, r = divmod(n, d)
    qp, rp, rule = _adjust(d, q, r)
    assert n == d * qp + rp and qp % 2 == 1
    if rp % 2:
        case, s = "a", rp
        if 4 * qp < rp * rp:
            raise ArithmeticError(f"case a bound failed: 4q'={4 * qp} < r'^2={rp * rp}")
    else:
        case, s = "b", rp // 2
        if rp % 4 != 2 or 16 * qp < rp * rp:
            raise ArithmeticError(f"case b conditions failed for q'={qp}, r'={rp}")
    m = 4 * qp - s * s
    a, b, c = squares = three_odd_squares(m)
    flipped = (s + a + b + c) % 4 != 0
    if flipped:
        a = -a
    assert (s + a + b + c) % 4 == 0
    alpha = (s + a + b + c) // 4
    beta = (s - a - b + c) // 4
    gamma = (s - a + b - c) // 4
    delta = (s + a - b - c) // 4
    if case == "a":
        head = (-alpha, alpha, -beta, beta, -gamma, gamma, -delta, delta)
    else:
        head = (-alpha, -beta, alpha, beta, -gamma, -delta, gamma, delta)
    x = CoreVector(d, head + (0,) * (d - 8))
    if value_of_vector(x) != n:
        raise ArithmeticError(f"construction produced value {value_of_vector(x)} instead of {n}")
    return KimingSolution(
        d=d, n=n, q=q, r=r, q_prime=qp, r_prime=rp, adjustment=rule, case=case, r_used=s,
        squares=squares, a=a, b=b, c=c, flipped=flipped,
        alpha=alpha, beta=beta, gamma=gamma, delta=delta, x=x,
    )
