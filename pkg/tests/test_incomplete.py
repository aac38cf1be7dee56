import pytest

from lehmer_lab.exact_core import InvalidInputError
from lehmer_lab.incomplete import (
    composition_count,
    incomplete_w,
    w_ge_determinant,
    w_ge_explicit,
    w_ge_recurrence,
    w_ge_trudi,
    w_le_determinant,
    w_le_explicit,
    w_le_recurrence,
    w_le_trudi,
)
from lehmer_lab.lehmer_euler import w_recurrence


def test_m1_restricted_is_a_single_term_inverse():
    # 1/(1 + t^3/3!) gives (-1)^n (3n)! / 6^n
    assert list(w_le_recurrence(6, 1)) == [1, -1, 20, -1680, 369600, -168168000]


def test_frozen_values():
    assert list(w_le_recurrence(6, 2)) == [1, -1, 19, -1512, 315084, -135795660]
    assert list(w_ge_recurrence(6, 2)) == [1, 0, -1, -1, 923, 10009]


@pytest.mark.parametrize("m", range(1, 5))
def test_four_routes_agree(m):
    le_tab = w_le_recurrence(13, m)
    ge_tab = w_ge_recurrence(13, m)
    for n in range(1, 13):
        assert w_le_determinant(n, m) == w_le_trudi(n, m) == w_le_explicit(n, m) == le_tab[n]
        assert w_ge_determinant(n, m) == w_ge_trudi(n, m) == w_ge_explicit(n, m) == ge_tab[n]


def test_reductions():
    base = w_recurrence(20)
    assert tuple(w_ge_recurrence(20, 1)) == tuple(base)
    for m in range(1, 8):
        le_tab = w_le_recurrence(20, m)
        assert all(le_tab[n] == base[n] for n in range(m + 1))


def test_zero_block():
    for m in range(2, 7):
        ge_tab = w_ge_recurrence(15, m)
        assert all(ge_tab[n] == 0 for n in range(1, m))
        assert ge_tab[m] == -1


def test_determinant_accepts_n_below_m():
    assert w_le_determinant(3, 10) == w_recurrence(4)[3]
    assert w_ge_determinant(2, 5) == 0


def test_raw_index_accessor():
    assert incomplete_w("le", 9, 2) == -1512
    assert incomplete_w("ge", 12, 2) == 923
    assert incomplete_w("le", 10, 2) == 0
    with pytest.raises(InvalidInputError):
        incomplete_w("le", -3, 1)


def test_bad_bounds():
    with pytest.raises(InvalidInputError):
        w_le_recurrence(5, 0)
    with pytest.raises(InvalidInputError):
        w_ge_explicit(0, 2)


def test_composition_count():
    assert composition_count(10) == 2**9
    assert composition_count(10, 1, 2) == 89
    assert composition_count(7, 3) == 3  # 7, 3+4, 4+3
