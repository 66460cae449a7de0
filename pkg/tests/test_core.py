import pytest
from hypothesis import given, settings, strategies as st

from deltanu import Degenerate, NotPrimitive, NumericalSemigroup, contains, gaps_of, new_semigroup, parse_generators
from deltanu.core import SemigroupError

from conftest import CORPUS, SMALL, brute_contains


def test_canonical_input_kept():
    S = new_semigroup([4, 9, 10, 15])
    assert S.generators == (4, 9, 10, 15)
    assert S.p == 4


def test_redundant_generator_dropped():
    assert new_semigroup([5, 9, 11, 20]).generators == (5, 9, 11)
    assert brute_contains((5, 9, 11), 20)


def test_unsorted_duplicates():
    assert new_semigroup([11, 5, 9, 5, 9]).generators == (5, 9, 11)


def test_not_primitive():
    with pytest.raises(NotPrimitive):
        new_semigroup([2, 4, 6])


@pytest.mark.parametrize("raw", [[1, 5, 7], [1], [3, 6, 9, 1]])
def test_degenerate(raw):
    with pytest.raises(Degenerate):
        new_semigroup(raw)


def test_constructor_rejects_non_minimal():
    with pytest.raises(SemigroupError):
        NumericalSemigroup((5, 9, 11, 20))
    with pytest.raises(SemigroupError):
        NumericalSemigroup((9, 5, 11))


def test_parse_generators():
    assert parse_generators(" 4, 9,10 ,15 ").generators == (4, 9, 10, 15)
    with pytest.raises(SemigroupError):
        parse_generators("4,x,9")


@pytest.mark.parametrize("s,expected", [(0, True), (7, False), (14, True)])
def test_contains_examples(s, expected):
    assert contains(new_semigroup([5, 9, 11]), s) is expected


@pytest.mark.parametrize("gens", CORPUS + SMALL)
def test_contains_matches_brute_force(gens):
    S = new_semigroup(gens)
    assert [contains(S, s) for s in range(201)] == [brute_contains(gens, s) for s in range(201)]
    assert not contains(S, -3)


@pytest.mark.parametrize("gens", CORPUS + SMALL)
def test_minimality(gens):
    S = new_semigroup(gens)
    for i, a in enumerate(S.generators):
        rest = S.generators[:i] + S.generators[i + 1:]
        assert not brute_contains(rest, a)


@pytest.mark.parametrize("values,expected", [
    ((3, 5, 9), (2, 4)),
    ((7,), ()),
    ((), ()),
    ((5, 7, 9), (2,)),
])
def test_gaps_of(values, expected):
    assert gaps_of(values) == expected


@given(st.sets(st.integers(0, 500), min_size=1, max_size=30), st.integers(1, 50))
def test_gaps_of_contains_appended_gap(values, g):
    values = sorted(values)
    assert g in gaps_of(values + [values[-1] + g])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 30), min_size=2, max_size=5))
def test_new_semigroup_is_minimal_and_idempotent(raw):
    try:
        S = new_semigroup(raw)
    except SemigroupError:
        return
    assert new_semigroup(S.generators) == S
    assert all(contains(S, a) for a in raw)
