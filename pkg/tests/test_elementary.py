from math import comb

import pytest

from semiforest.elementary import (
    InfeasibleError,
    count_elementary,
    enumerate_elementary,
    feasible,
    is_elementary,
)
from semiforest.forest import theta, theta_kunz
from semiforest.kunz import KunzVector, kunz_from_semigroup
from semiforest.semigroup import GapSemigroup, from_generators

from . import brute


def test_feasible():
    assert feasible(7, 5)
    assert not feasible(10, 5)
    assert not feasible(4, 5)


@pytest.mark.parametrize("F, g, n", [(7, 5, 3), (6, 5, 2), (5, 5, 1), (9, 5, 1), (1, 1, 1)])
def test_count_elementary(F, g, n):
    assert count_elementary(F, g) == n


def test_count_elementary_rejects_infeasible():
    with pytest.raises(InfeasibleError):
        count_elementary(10, 5)
    with pytest.raises(InfeasibleError):
        list(enumerate_elementary(4, 5))


def _non_gaps(S, upto):
    return [n for n in range(upto + 1) if n in S]


def test_example_seeds():
    seeds = list(enumerate_elementary(7, 5))
    assert [s.A for s in seeds] == [(4, 5), (4, 6), (5, 6)]
    assert [_non_gaps(s.semigroup, 8) for s in seeds] == [[0, 4, 5, 8], [0, 4, 6, 8], [0, 5, 6, 8]]

    (s,) = enumerate_elementary(5, 5)
    assert s.A == () and s.kunz.text() == "111110000"
    (s,) = enumerate_elementary(8, 5)
    assert s.kunz.text() == "111100010"
    (s,) = enumerate_elementary(9, 5)
    assert s.kunz.text() == "111100001"
    assert [s.kunz.text() for s in enumerate_elementary(6, 5)] == ["111011000", "111101000"]
    assert [s.kunz.text() for s in enumerate_elementary(7, 5)] == ["111001100", "111010100", "111100100"]


def test_rank_slices():
    full = list(enumerate_elementary(15, 10))
    parts = [list(enumerate_elementary(15, 10, a, a + 3)) for a in range(0, len(full), 3)]
    assert [s for p in parts for s in p] == full


@pytest.mark.parametrize("g", range(1, 16))
def test_seed_stream(g):
    for F in range(g, 2 * g):
        seeds = list(enumerate_elementary(F, g))
        assert len(seeds) == count_elementary(F, g) == comb((F + 1) // 2 - 1, F - g)
        assert [s.A for s in seeds] == sorted(s.A for s in seeds)
        assert len({s.A for s in seeds}) == len(seeds)
        if g <= 9:
            for s in seeds:
                S = s.semigroup
                assert brute.is_semigroup_gapset(S.gaps)
                assert (S.frobenius, S.genus) == (F, g)
                assert is_elementary(S) and is_elementary(s.kunz)
                assert kunz_from_semigroup(S) == s.kunz
                assert theta(S, F) == S
                assert theta_kunz(s.kunz, F) == s.kunz


def test_is_elementary_examples():
    assert is_elementary(from_generators({4, 5, 11}))
    assert not is_elementary(from_generators({3, 8, 10}))
    assert is_elementary(from_generators({2, 3}))
    assert not is_elementary(KunzVector.from_text("110110100"))


@pytest.mark.parametrize("g", range(1, 9))
def test_elementary_set_is_exactly_the_fixed_points(g):
    for gaps in brute.all_gapsets(g):
        S = GapSemigroup(gaps)
        F = S.frobenius
        seeds = {s.semigroup for s in enumerate_elementary(F, g)}
        assert (S in seeds) == is_elementary(S) == (theta(S, F) == S)
