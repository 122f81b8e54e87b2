import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fermat3f2.characters import (
    CharacterTuple,
    classify,
    enumerate_exceptional,
    frac,
    galois_orbit,
    is_hodge,
    family_tuple,
    units,
)
from fermat3f2.errors import InvalidTuple, NotHodge


@pytest.mark.parametrize("q, want", [(Fraction(-1, 3), Fraction(2, 3)), (Fraction(7, 5), Fraction(2, 5)), (2, 0)])
def test_frac(q, want):
    assert frac(q) == want


def test_units():
    assert units(12) == [1, 5, 7, 11]
    assert units(2) == [1]


@pytest.mark.parametrize(
    "a, m",
    [((1, 2, 3), 5), ((0, 1, 2, 3), 5), ((1, 2, 3, 5), 5), ((2, 4, 6, 8), 10), ((1, 1, 1, 1), 1)],
)
def test_invalid_tuples(a, m):
    with pytest.raises(InvalidTuple):
        CharacterTuple(a, m)


def test_hodge_examples():
    assert is_hodge(CharacterTuple((1, 4, 9, 10), 12))
    assert not is_hodge(CharacterTuple((1, 1, 1, 2), 5))


def test_classify_examples():
    t1 = classify(CharacterTuple((1, 6, 2, 5), 7))
    assert t1.kind == "Type1"
    assert t1.pairing == ((0, 1), (2, 3))

    t2 = classify(CharacterTuple((4, 8, 3, 5), 10))
    assert t2.kind == "Type2a"
    assert t2.alpha == Fraction(1, 5) and t2.b == 2

    assert classify(CharacterTuple((1, 4, 9, 10), 12)).kind == "Exceptional"

    with pytest.raises(NotHodge):
        classify(CharacterTuple((1, 1, 1, 2), 5))


def test_galois_orbit_examples():
    assert galois_orbit(CharacterTuple((1, 4, 9, 10), 12)) == {
        (1, 4, 9, 10), (2, 5, 8, 9), (3, 4, 7, 10), (2, 3, 8, 11)
    }
    assert galois_orbit(CharacterTuple((1, 7, 9, 11), 14)) == {(1, 7, 9, 11), (3, 5, 7, 13)}


def test_enumerate_small():
    r = enumerate_exceptional(12)
    assert (r.e_m, r.o_m) == (8, 2)
    assert sorted(r.representatives) == [(1, 4, 9, 10), (1, 6, 8, 9)]
    assert enumerate_exceptional(13).e_m == 0
    assert enumerate_exceptional(13).to_dict()["orbits"] == []


def test_enumerate_m30_contains_listed_representative():
    r = enumerate_exceptional(30)
    assert (r.e_m, r.o_m) == (98, 15)
    assert (1, 11, 24, 24) in r.representatives


def test_orbit_sizes_sum_to_e_m():
    r = enumerate_exceptional(24)
    assert sum(o.size for o in r.orbits) == r.e_m


@st.composite
def tuples(draw, max_m=60):
    m = draw(st.integers(2, max_m))
    a = tuple(draw(st.integers(1, m - 1)) for _ in range(4))
    assume(math.gcd(*a, m) == 1)
    return CharacterTuple(a, m)


@settings(max_examples=200, deadline=None)
@given(tuples(), st.data())
def test_hodge_invariant_under_units_and_permutations(t, data):
    s = data.draw(st.sampled_from(units(t.m)))
    perm = data.draw(st.permutations(range(4)))
    permuted = CharacterTuple(tuple(t.a[k] for k in perm), t.m)
    assert is_hodge(t) == is_hodge(t.scaled(s)) == is_hodge(permuted)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 60), st.integers(1, 59), st.integers(1, 59))
def test_type1_pairs_are_hodge(m, a, b):
    assume(a < m and b < m and math.gcd(a, b, m) == 1)
    t = CharacterTuple((a, m - a, b, m - b), m)
    assert is_hodge(t)
    assert classify(t).kind == "Type1"


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["Type2a", "Type2b", "Type2c"]), st.fractions(0, 1, max_denominator=40))
def test_family_members_are_hodge(kind, alpha):
    vals = family_tuple(kind, alpha)
    assume(all(v != 0 for v in vals))
    t = CharacterTuple.from_fractions(vals)
    assert is_hodge(t)
    assert classify(t).kind in ("Type1", kind, "Type2a", "Type2b", "Type2c")
