import pytest
from hypothesis import given
from hypothesis import strategies as st

from lehmer_lab.exact_core import InvalidInputError
from lehmer_lab.lehmer_euler import (
    compare_methods,
    euler_e,
    euler_numbers,
    inversion_det_check,
    lehmer_w,
    w_determinant,
    w_explicit,
    w_recurrence,
    w_residues,
    w_series,
    w_trudi,
)

# |W_{3n}|, n = 0..10
KNOWN_ABS = [
    1,
    1,
    19,
    1513,
    315523,
    136085041,
    105261234643,
    132705221399353,
    254604707462013571,
    705927677520644167681,
    2716778010767155313771539,
]

EULER = [1, -1, 5, -61, 1385, -50521, 2702765, -199360981, 19391512145]


def test_known_values_with_alternating_sign():
    w = w_recurrence(11)
    assert list(w) == [(-1) ** n * v for n, v in enumerate(KNOWN_ABS)]


def test_raw_index_access():
    assert lehmer_w(0) == 1
    assert lehmer_w(9) == -1513
    assert lehmer_w(18) == 105261234643
    assert lehmer_w(30) == 2716778010767155313771539
    assert [lehmer_w(m) for m in (1, 2, 4, 5, 31)] == [0] * 5
    assert w_recurrence(4).at(7) == 0
    with pytest.raises(InvalidInputError):
        lehmer_w(-3)


def test_recurrence_rejects_empty_table():
    with pytest.raises(InvalidInputError):
        w_recurrence(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_each_single_index_method(n):
    want = (-1) ** n * KNOWN_ABS[n]
    assert w_determinant(n) == want
    assert w_trudi(n) == want
    assert w_explicit(n) == want


def test_series_table():
    assert list(w_series(11)) == list(w_recurrence(11))


def test_compare_methods_small():
    tables, mismatches = compare_methods(21)
    assert not mismatches
    assert set(tables) == {"recurrence", "series", "determinant", "trudi"}


def test_inversion_determinant():
    assert all(inversion_det_check(n) for n in range(1, 12))


def test_euler_numbers():
    assert list(euler_numbers(len(EULER))) == EULER
    assert euler_e(3) == 0
    assert euler_e(16) == 19391512145


def test_sign_law_to_300():
    w = w_recurrence(301)
    assert all((-1) ** n * v > 0 for n, v in enumerate(w))


@given(st.integers(1, 120), st.sampled_from([2, 9, 27, 81, 1000, 3**7]))
def test_residues_agree_with_exact_values(N, modulus):
    exact = w_recurrence(N)
    assert w_residues(N, modulus) == [v % modulus for v in exact]
