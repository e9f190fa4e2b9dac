import itertools
import json
from collections import Counter

import pytest
import sympy

from coreblocks.partitions import Partition, d_core, enumerate_partitions, is_d_core, removal_path_count
from coreblocks.symchars import (
    CharTable,
    branching_check,
    character_table,
    column_orthogonality_holds,
    conjugacy_classes,
    cycle_type,
    iterated_mn_value,
    mn_value,
    row_orthogonality_holds,
)

P = Partition


def perm_cycle_type(perm):
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return P(tuple(sorted(lengths, reverse=True)))


def frobenius_character(lam, mu):
    """Coefficient of x^(lam + delta) in a_delta * p_mu."""
    k = max(len(lam), 1)
    xs = sympy.symbols(f"x0:{k}")
    poly = sympy.Poly(1, *xs)
    for i in range(k):
        for j in range(i + 1, k):
            poly *= sympy.Poly(xs[i] - xs[j], *xs)
    for m in mu.parts:
        poly *= sympy.Poly(sum(x**m for x in xs), *xs)
    padded = lam.parts + (0,) * (k - len(lam))
    exps = tuple(padded[i] + k - 1 - i for i in range(k))
    return poly.coeff_monomial(sympy.prod(x**e for x, e in zip(xs, exps)))


def test_class_sizes_n3():
    sizes = {str(c.partition): c.class_size for c in conjugacy_classes(3)}
    assert sizes == {"[1,1,1]": 1, "[2,1]": 3, "[3]": 2}
    assert [c.class_size for c in conjugacy_classes(1)] == [1]
    assert sum(c.class_size for c in conjugacy_classes(5)) == 120


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_brute_force(n):
    counts = Counter(perm_cycle_type(p) for p in itertools.permutations(range(n)))
    assert {c.partition: c.class_size for c in conjugacy_classes(n)} == dict(counts)


def test_order_and_regularity():
    c = cycle_type(P((3, 2)))
    assert c.order_lcm == 6
    assert not c.is_ell_regular(2) and not c.is_ell_regular(3) and c.is_ell_regular(5)


def test_mn_examples():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert mn_value(P((n,)), mu) == 1
            assert mn_value(P((1,) * n), mu) == (-1) ** (n - len(mu))
    assert mn_value(P((2, 1)), P((3,))) == -1
    with pytest.raises(ValueError):
        mn_value(P((2, 1)), P((2,)))


def test_sign_character_brute_force():
    for n in range(1, 7):
        for perm in itertools.permutations(range(n)):
            inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            assert mn_value(P((1,) * n), perm_cycle_type(perm)) == (-1) ** inversions


@pytest.mark.parametrize("n", range(1, 6))
def test_mn_matches_frobenius_formula(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert mn_value(lam, mu) == frobenius_character(lam, mu)


def test_small_tables():
    t = character_table(2)
    assert t.characters == (P((2,)), P((1, 1)))
    assert [c.partition for c in t.classes] == [P((2,)), P((1, 1))]
    # columns: (2) then (1,1)
    assert t.value(P((2,)), P((2,))) == 1 and t.value(P((2,)), P((1, 1))) == 1
    assert t.value(P((1, 1)), P((2,))) == -1 and t.value(P((1, 1)), P((1, 1))) == 1
    assert character_table(1).values == ((1,),)


@pytest.mark.parametrize("n", range(1, 11))
def test_orthogonality(n):
    t = character_table(n)
    assert row_orthogonality_holds(t)
    assert column_orthogonality_holds(t)
    assert all(t.degree(lam) > 0 for lam in t.characters)


def test_orthogonality_detects_corruption():
    t = character_table(4)
    bad = CharTable(t.n, t.characters, t.classes, (tuple(v + 1 for v in t.values[0]),) + t.values[1:])
    assert not row_orthogonality_holds(bad)
    assert not column_orthogonality_holds(bad)


@pytest.mark.parametrize("n", range(1, 11))
def test_degree_is_path_count(n):
    t = character_table(n)
    for lam in t.characters:
        assert t.degree(lam) == removal_path_count(lam, 1)


def test_iterated_mn_examples():
    assert iterated_mn_value(P((2, 1)), 3, 1, P(())) == -1
    assert iterated_mn_value(P((3, 1)), 3, 0, P((2, 1, 1))) == mn_value(P((3, 1)), P((2, 1, 1)))
    assert iterated_mn_value(P((2, 2)), 2, 2, P(())) == 2
    with pytest.raises(ValueError):
        iterated_mn_value(P((2, 2)), 2, 1, P((1,)))  # size mismatch
    with pytest.raises(ValueError):
        iterated_mn_value(P((2, 2)), 2, 1, P((2,)), strict=True)


def concat(mu, d, w):
    return P(tuple(sorted(mu.parts + (d,) * w, reverse=True)))


@pytest.mark.parametrize("n", range(1, 11))
def test_iterated_mn_consistency(n):
    for lam in enumerate_partitions(n):
        for d in range(1, n + 1):
            cq = d_core(lam, d)
            for rest in enumerate_partitions(cq.core.size):
                expected = mn_value(lam, concat(rest, d, cq.weight))
                assert iterated_mn_value(lam, d, cq.weight, rest) == expected


def test_iterated_mn_partial_weights():
    for lam in enumerate_partitions(7):
        for d in (2, 3):
            for w in range(0, 7 // d + 1):
                for rest in enumerate_partitions(7 - w * d):
                    assert iterated_mn_value(lam, d, w, rest) == mn_value(lam, concat(rest, d, w))


@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_core_characters_vanish_on_singular_classes(ell):
    for n in range(1, 11):
        t = character_table(n)
        for lam in t.characters:
            if is_d_core(lam, ell):
                for c, v in zip(t.classes, t.row(lam)):
                    if not c.is_ell_regular(ell):
                        assert v == 0


@pytest.mark.parametrize("n", [2, 4, 7])
def test_branching(n):
    assert branching_check(n)


def test_json_round_trip():
    t = character_table(5)
    data = json.loads(t.to_json())
    assert data["n"] == 5 and len(data["values"]) == 7
    assert all(isinstance(v, str) for row in data["values"] for v in row)
    assert CharTable.from_dict(data) == t


def test_table_bound(monkeypatch):
    from coreblocks import config
    import coreblocks.symchars as sc

    monkeypatch.setattr(sc, "limits", lambda: config.Limits(chartable_max_n=3))
    sc.character_table.cache_clear()
    with pytest.raises(config.BoundExceeded):
        sc.character_table(4)
    sc.character_table.cache_clear()
