import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deltanu import (
    BelowN0,
    EmbeddingDimensionTooSmall,
    compute_bounds,
    decompose,
    delta_nu_fast,
    delta_nu_naive,
    delta_nu_record,
    gaps_of,
    new_semigroup,
    w_set,
    window_w_set,
)

from conftest import CORPUS, brute_gaps, brute_nu

S4 = new_semigroup([4, 9, 10, 15])
S31014 = new_semigroup([3, 10, 14])


def test_window_example():
    win = window_w_set(S4, 130, 520, 723)
    assert win[0] == 520 and win[-1] <= 723
    assert win == tuple(s for s in w_set(S4, 130) if s <= 723)


def test_window_single_point():
    for n in (0, 1, 17, 200):
        assert window_w_set(S4, n, 4 * n, 4 * n) == (4 * n,)


def test_window_matches_full_w_set():
    B = compute_bounds(S31014)
    lo, hi = 180, 180 + B.lambda1_ceil
    assert window_w_set(S31014, 60, lo, hi) == tuple(s for s in w_set(S31014, 60) if lo <= s <= hi)


def test_window_empty():
    assert window_w_set(S4, 10, 0, 39) == ()
    assert window_w_set(S4, 10, 151, 400) == ()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(CORPUS), st.integers(0, 60), st.integers(0, 1000), st.integers(0, 400))
def test_window_property(gens, n, lo, width):
    S = new_semigroup(gens)
    hi = lo + width
    assert window_w_set(S, n, lo, hi) == tuple(s for s in w_set(S, n) if lo <= s <= hi)


def test_decompose_windows():
    z = decompose(S4, 130)
    assert (z.x1, z.x2) == (723, 1191)
    assert z.x2 - z.x1 == 468
    z = decompose(S4, 150)
    assert z.x2 - z.x1 == 688


def test_decompose_3_10_14_at_n0():
    # brute force puts n = 60 in the {1, 4} class (n = 0 mod 3)
    z = decompose(S31014, 60)
    assert set(gaps_of(z.B3)) | {1} | set(gaps_of(z.B1)) == {1, 4}
    assert brute_gaps(brute_nu((3, 10, 14), 60)) == (1, 4)


@pytest.mark.parametrize("gens", CORPUS)
def test_decomposition_invariants(gens):
    S = new_semigroup(gens)
    B = compute_bounds(S)
    a1, ap = S.multiplicity, S.largest
    for n in (B.N0, B.N0 + 7, B.N0 + 40):
        z = decompose(S, n, B)
        assert all(n * a1 <= s <= z.x1 for s in z.W3)
        assert all(z.x2 <= s <= n * ap for s in z.W1)
        assert all(Fraction(l) <= Fraction(z.x1, ap) for l in z.B3)
        assert all(Fraction(l) >= Fraction(z.x2, a1) for l in z.B1)
        assert z.evaluated_elements <= B.lambda1_ceil + B.lambda2_floor + 2


def test_decompose_below_n0():
    with pytest.raises(BelowN0):
        decompose(S4, 88)


@pytest.mark.parametrize("n,expected", [(61, (1, 2)), (62, (1, 3)), (63, (1, 4))])
def test_fast_3_10_14(n, expected):
    assert delta_nu_fast(S31014, n) == expected
    assert brute_gaps(brute_nu((3, 10, 14), n)) == expected


def test_fast_3_10_11():
    assert delta_nu_fast(new_semigroup([3, 10, 11]), 100) == (1,)


def test_fast_rejects_p2():
    with pytest.raises(EmbeddingDimensionTooSmall):
        delta_nu_fast(new_semigroup([3, 5]), 10)


def test_record_methods():
    B = compute_bounds(S31014)
    assert delta_nu_record(S31014, 59, B).method == "naive"
    r = delta_nu_record(S31014, 60, B)
    assert r.method == "fast"
    assert r.evaluated_elements < len(w_set(S31014, 60))
    assert delta_nu_record(new_semigroup([3, 5]), 9).method == "naive"
    with pytest.raises(ValueError):
        delta_nu_record(S31014, 9, method="quick")


def test_record_json():
    r = delta_nu_record(S31014, 61)
    data = json.loads(json.dumps(r.to_dict()))
    assert data == {"n": 61, "method": "fast", "delta_nu": [1, 2],
                    "evaluated_elements": r.evaluated_elements}


@pytest.mark.parametrize("gens", CORPUS)
def test_work_constant_in_n(gens):
    S = new_semigroup(gens)
    B = compute_bounds(S)
    counts = {delta_nu_record(S, n, B).evaluated_elements for n in range(B.N0, B.N0 + 30)}
    assert len(counts) == 1
    assert counts.pop() <= B.lambda1_ceil + B.lambda2_floor + 2


@pytest.mark.parametrize("gens", CORPUS)
def test_d_always_present_past_n0(gens):
    S = new_semigroup(gens)
    B = compute_bounds(S)
    for n in range(B.N0, B.N0 + 25):
        assert B.d in delta_nu_fast(S, n, B)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CORPUS), st.integers(0, 120))
def test_fast_equals_naive_sampled(gens, k):
    S = new_semigroup(gens)
    n = compute_bounds(S).N0 - 20 + k
    assert delta_nu_fast(S, max(n, 0)) == delta_nu_naive(S, max(n, 0))
