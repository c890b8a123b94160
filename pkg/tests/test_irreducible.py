import pytest

from semiforest.irreducible import (
    PSEUDO_SYMMETRIC,
    SYMMETRIC,
    classify,
    enumerate_irreducible,
    t_root,
)
from semiforest.elementary import enumerate_elementary
from semiforest.semigroup import GapSemigroup, from_generators

from . import brute


def irreducible_brute(F):
    g = F // 2 + 1
    return {gaps for gaps in brute.all_gapsets(g) if gaps[-1] == F}


def run(F):
    out = []
    n = enumerate_irreducible(F, out.append)
    assert n == len(out)
    return out


def test_F7():
    got = run(7)
    assert {c.semigroup for c in got} == {from_generators(G) for G in ({2, 9}, {3, 5}, {4, 5, 6})}
    assert all(c.kind == SYMMETRIC for c in got)
    assert got[0].semigroup == t_root(7) == from_generators({4, 5, 6})
    assert {c.semigroup.gaps for c in got} == irreducible_brute(7)


def test_F1():
    (c,) = run(1)
    assert c.semigroup == from_generators({2, 3}) and c.kind == SYMMETRIC


def test_F4():
    # the only genus-3 semigroup with Frobenius number 4
    got = run(4)
    assert {c.semigroup.gaps for c in got} == irreducible_brute(4) == {(1, 2, 4)}
    assert got[0].semigroup == from_generators({3, 5, 7})
    assert got[0].kind == PSEUDO_SYMMETRIC


@pytest.mark.parametrize("F", range(1, 16))
def test_matches_brute_force(F):
    got = run(F)
    assert {c.semigroup.gaps for c in got} == irreducible_brute(F)
    (seed,) = enumerate_elementary(F, F // 2 + 1)
    assert seed.semigroup == t_root(F)
    assert all(classify(c.semigroup) == c for c in got)


def test_classify():
    assert classify(from_generators({2, 9})).kind == SYMMETRIC
    assert classify(from_generators({3, 8, 10})) is None
    assert classify(from_generators({2, 3})).kind == SYMMETRIC
    with pytest.raises(ValueError):
        classify(GapSemigroup(()))


@pytest.mark.parametrize("g", range(1, 8))
def test_classify_only_irreducible_genus(g):
    for gaps in brute.all_gapsets(g):
        S = GapSemigroup(gaps)
        c = classify(S)
        assert (c is not None) == (g == (S.frobenius + 2) // 2)
        if c is not None:
            assert c.kind == (SYMMETRIC if S.frobenius % 2 else PSEUDO_SYMMETRIC)
