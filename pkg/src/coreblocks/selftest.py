"""Invariant suites run by ``coreblocks selftest``.

Each suite returns ``True`` when its invariant holds on every case up to the
given size.  Sizes are clipped per suite so the default run stays quick.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import cores, definingchar, glnq, symblocks, symchars
from .partitions import Partition, d_core, enumerate_partitions, is_d_core, partition_count, removal_path_count


def _concat(rest, d, w):
    return Partition(tuple(sorted(rest.parts + (d,) * w, reverse=True)))


def orthogonality(k: int) -> bool:
    return all(
        symchars.row_orthogonality_holds(t) and symchars.column_orthogonality_holds(t)
        for t in (symchars.character_table(n) for n in range(1, min(k, 10) + 1))
    )


def iterated_mn(k: int) -> bool:
    for n in range(1, min(k, 10) + 1):
        for lam in enumerate_partitions(n):
            for d in range(1, n + 1):
                cq = d_core(lam, d)
                for rest in enumerate_partitions(cq.core.size):
                    if symchars.iterated_mn_value(lam, d, cq.weight, rest) != symchars.mn_value(lam, _concat(rest, d, cq.weight)):
                        return False
    return True


def blocks_by_central_characters(k: int) -> bool:
    for n in range(1, min(k, 7) + 1):
        for ell in (2, 3, 5, 7):
            cores_side = {frozenset(b.members) for b in symblocks.blocks(n, ell)}
            omega_side = {frozenset(g) for g in symblocks.blocks_via_central_characters(n, ell)}
            if cores_side != omega_side:
                return False
    return True


def core_characters_vanish(k: int) -> bool:
    for n in range(1, min(k, 10) + 1):
        t = symchars.character_table(n)
        for ell in (2, 3, 5, 7):
            for lam in t.characters:
                if is_d_core(lam, ell):
                    for c, v in zip(t.classes, t.row(lam)):
                        if not c.is_ell_regular(ell) and v != 0:
                            return False
    return True


def heights_zero_iff_abelian(k: int) -> bool:
    return all(symblocks.bhzc_check(n, ell) for n in range(1, min(k, 10) + 1) for ell in (2, 3, 5, 7))


def idempotents_and_brauer(k: int) -> bool:
    for n in range(1, min(k, 5) + 1):
        for ell in (2, 3, 5):
            idems = [symblocks.block_idempotent(b) for b in symblocks.blocks(n, ell)]
            total = symblocks.CentralElement(n, "rational", {})
            for i, e in enumerate(idems):
                if symblocks.multiply_central(e, e) != e:
                    return False
                e.reduce_mod(ell)  # raises if not ell-integral
                for f in idems[i + 1 :]:
                    if not symblocks.multiply_central(e, f).is_zero():
                        return False
                total = _add(total, e)
            if total != symblocks.unit(n):
                return False
            if not symblocks.brauer_formula_holds(n, ell):
                return False
    return True


def _add(a, b):
    coeffs = dict(a.coefficients)
    for g, c in b.coefficients.items():
        coeffs[g] = coeffs.get(g, 0) + c
    return symblocks.CentralElement(a.n, a.field, coeffs)


def core_counts(k: int) -> bool:
    nmax = min(4 * k, 40)
    for d in range(2, 8):
        series = cores.count_cores_genfun(d, nmax)
        if any(series[n] != cores.count_cores_enum(d, n) for n in range(nmax + 1)):
            return False
    three = cores.count_cores_genfun(3, 200)
    return all(three[n] == cores.c3_legendre(n) for n in range(201)) and all(
        cores.granville_ono_zero(n) == (cores.c3_legendre(n) == 0) for n in range(501)
    )


def kiming(k: int) -> bool:
    for d in (9, 11, 13):
        start = -(-(d**3 + 3 * d - 4) // 4)
        for n in range(start, start + 10 * k):
            s = cores.kiming_construct(d, n)
            kappa = cores.core_from_vector(s.x)
            if sum(s.x.x) != 0 or cores.value_of_vector(s.x) != n or kappa.size != n or not is_d_core(kappa, d):
                return False
    return True


def gl_combinatorics(k: int) -> bool:
    for n in range(1, min(k, 12) + 1):
        for d in range(1, n + 1):
            series = glnq.d_series_partition(n, d)
            if sum(glnq.series_size_via_relative_weyl(d, s.weight) for s in series) != partition_count(n):
                return False
            for lam in enumerate_partitions(n):
                cq = d_core(lam, d)
                if any(d_core(mu, d).core != cq.core for mu in glnq.lusztig_restriction(lam, d)):
                    return False
                if glnq.iterated_restriction(lam, d, cq.weight) != {cq.core: cq.sign * removal_path_count(lam, d)}:
                    return False
    return True


def defining_characteristic(k: int) -> bool:
    for n in range(1, min(k, 4) + 1):
        for q in (2, 3, 4, 5):
            ibr, alp = definingchar.alperin_weight_count(n, q)
            if not ibr == alp == definingchar.closed_form_count(n, q):
                return False
    return True


SUITES: dict[str, Callable[[int], bool]] = {
    "orthogonality": orthogonality,
    "iterated_mn": iterated_mn,
    "blocks_by_central_characters": blocks_by_central_characters,
    "core_characters_vanish": core_characters_vanish,
    "heights_zero_iff_abelian": heights_zero_iff_abelian,
    "idempotents_and_brauer": idempotents_and_brauer,
    "core_counts": core_counts,
    "kiming": kiming,
    "gl_combinatorics": gl_combinatorics,
    "defining_characteristic": defining_characteristic,
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    seconds: float
    error: str | None = None


def run_selftest(max_n: int = 8) -> list[SuiteResult]:
    if max_n < 1:
        raise ValueError("max_n must be positive")
    out = []
    for name, suite in SUITES.items():
        start = time.perf_counter()
        try:
            passed, error = bool(suite(max_n)), None
        except Exception as exc:  # a crash counts as a failed suite
            passed, error = False, f"{type(exc).__name__}: {exc}"
        out.append(SuiteResult(name, passed, round(time.perf_counter() - start, 3), error))
    return out
