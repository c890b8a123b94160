from itertools import product

import pytest

from semiforest.kunz import (
    KunzVector,
    NotAKunzVectorError,
    is_kunz_of_FG,
    is_kunz_vector,
    kunz_from_apery,
    kunz_from_semigroup,
    kunz_generators,
    kunz_invariants,
    semigroup_from_kunz,
)
from semiforest.semigroup import (
    GapSemigroup,
    from_generators,
    minimal_generators,
    pseudo_frobenius,
)

from . import brute


def kv(s):
    return KunzVector.from_text(s)


@pytest.mark.parametrize("gens, text", [
    ({3, 8, 10}, "110110100"),
    ({2, 11}, "101010101"),
    ({6, 7, 8, 9, 10, 11}, "111110000"),
    ({2, 3}, "1"),
])
def test_codec(gens, text):
    S = from_generators(gens)
    x = kunz_from_semigroup(S)
    assert x.text() == text
    assert kunz_from_apery(S) == x
    assert semigroup_from_kunz(x) == S
    assert from_generators(kunz_generators(x)) == S


def test_text_rendering_and_layout():
    x = KunzVector.from_sequence((1, 1, 0, 1, 1, 0, 1, 0, 0))
    assert str(x) == "110110100"
    assert x.as_tuple() == (1, 1, 0, 1, 1, 0, 1, 0, 0)
    assert x.bits == 0b001011011  # x_1 at the lowest bit
    assert x[7] == 1 and x[8] == 0
    with pytest.raises(ValueError):
        KunzVector.from_sequence((1, 0))


def test_semigroup_from_kunz_rejects():
    with pytest.raises(NotAKunzVectorError, match=r"x_1 \+ x_1 - x_2"):
        semigroup_from_kunz(kv("011"))
    with pytest.raises(NotAKunzVectorError, match="sum"):
        semigroup_from_kunz(kv("111"))


def test_predicates():
    assert is_kunz_vector((1, 0, 1))
    assert brute.is_semigroup_gapset((1, 3))
    assert not is_kunz_vector((0, 1, 1))
    assert is_kunz_of_FG((1, 1, 0, 1, 1, 0, 1, 0, 0), 7)
    assert not is_kunz_of_FG((1, 1, 0, 1, 1, 0, 1, 0, 0), 8)
    assert not is_kunz_of_FG((1, 1, 0, 1, 1, 0, 1, 0, 0), 5)
    # F = 9 vector of the same genus
    assert is_kunz_of_FG((1, 0, 1, 0, 1, 0, 1, 0, 1), 9)


@pytest.mark.parametrize("g", range(1, 7))
def test_predicate_matches_semigroups_exhaustively(g):
    """is_kunz_vector accepts exactly the vectors of genus-g semigroups."""
    L = 2 * g - 1
    expected = {tuple(1 if i in gaps else 0 for i in range(1, L + 1)) for gaps in brute.all_gapsets(g)}
    accepted = {xs for xs in product((0, 1), repeat=L) if is_kunz_vector(xs)}
    assert accepted == expected
    for xs in expected:
        F = max(i for i, v in enumerate(xs, 1) if v)
        assert is_kunz_of_FG(xs, F)
        assert all(not is_kunz_of_FG(xs, other) for other in range(1, L + 1) if other != F)


def test_invariant_examples():
    inv = kunz_invariants(kv("110110100"))
    assert (inv.frobenius, inv.multiplicity) == (7, 3)
    assert inv.generators == [3, 8]
    assert inv.pseudo_frobenius == [5, 7]
    inv = kunz_invariants(kv("111110000"))
    assert (inv.frobenius, inv.multiplicity, inv.pseudo_frobenius) == (5, 6, [1, 2, 3, 4, 5])
    inv = kunz_invariants(kv("101010101"))
    assert (inv.frobenius, inv.multiplicity, inv.pseudo_frobenius) == (9, 2, [9])


@pytest.mark.parametrize("g", range(1, 9))
def test_invariants_agree_with_semigroup_core(g):
    for gaps in brute.all_gapsets(g):
        S = GapSemigroup(gaps)
        x = kunz_from_semigroup(S)
        assert semigroup_from_kunz(x) == S
        assert kunz_from_apery(S) == x
        inv = kunz_invariants(x)
        assert inv.frobenius == S.frobenius
        assert inv.multiplicity == S.multiplicity
        assert inv.generators == [a for a in minimal_generators(S) if a <= 2 * g - 1]
        assert inv.pseudo_frobenius == pseudo_frobenius(S)
