import itertools

import pytest

from coreblocks.config import BoundExceeded
from coreblocks.definingchar import (
    AdmissiblePair,
    alperin_weight_count,
    closed_form_count,
    enumerate_admissible_pairs,
    levi_blocks,
    stabilizer_set,
    steinberg_count,
)

Q_VALUES = [2, 3, 4, 5]


def test_rank_one():
    for q in Q_VALUES:
        pairs = enumerate_admissible_pairs(1, q)
        assert len(pairs) == q - 1 and all(p.I == frozenset() for p in pairs)
        assert alperin_weight_count(1, q) == (q - 1, q - 1)
        assert steinberg_count(1, q) == q - 1


def test_gl2_f3():
    pairs = enumerate_admissible_pairs(2, 3)
    assert len(pairs) == 6
    constant = [p for p in pairs if p.theta[0] == p.theta[1]]
    assert len(constant) == 4  # two constant theta, each with I empty or {1}
    assert alperin_weight_count(2, 3) == (6, 6)


def test_pairs_unique_and_admissible():
    pairs = enumerate_admissible_pairs(3, 4)
    assert len(set(pairs)) == len(pairs)
    assert all(p.I <= stabilizer_set(p.theta) for p in pairs)


@pytest.mark.parametrize("q", Q_VALUES)
def test_counts(q):
    for n in range(1, 6):
        ibr, alp = alperin_weight_count(n, q)
        assert ibr == alp == closed_form_count(n, q)
        brute = sum(2 ** len(stabilizer_set(t)) for t in itertools.product(range(q - 1), repeat=n))
        assert ibr == brute


def test_steinberg():
    assert steinberg_count(3, 4) == 3
    for n in range(1, 6):
        assert steinberg_count(n, 2) == 1
    full = frozenset({1, 2})
    projective = [p for p in enumerate_admissible_pairs(3, 5) if p.I == full]
    assert all(len(set(p.theta)) == 1 for p in projective)
    assert AdmissiblePair(3, 5, (0, 0, 0), full) in projective


def test_levi_blocks():
    assert levi_blocks(4, frozenset()) == [range(0, 1), range(1, 2), range(2, 3), range(3, 4)]
    assert levi_blocks(4, frozenset({1, 3})) == [range(0, 2), range(2, 4)]
    assert levi_blocks(3, frozenset({1, 2})) == [range(0, 3)]


def test_rejects():
    with pytest.raises(ValueError):
        enumerate_admissible_pairs(2, 6)
    with pytest.raises(ValueError):
        enumerate_admissible_pairs(0, 3)
    with pytest.raises(ValueError):
        AdmissiblePair(2, 3, (0, 1), frozenset({1}))
    with pytest.raises(ValueError):
        AdmissiblePair(2, 3, (0, 2), frozenset())
    with pytest.raises(BoundExceeded):
        enumerate_admissible_pairs(12, 9)
