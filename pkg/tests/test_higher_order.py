import pytest
from hypothesis import given
from hypothesis import strategies as st

from lehmer_lab.exact_core import InvalidInputError
from lehmer_lab.higher_order import (
    OMEGA,
    OMEGA2,
    SQRT_MINUS_3,
    EisensteinInt,
    euler_higher_luo,
    w_higher_explicit,
    w_higher_series,
)
from lehmer_lab.lehmer_euler import euler_numbers, w_recurrence

eisenstein = st.builds(EisensteinInt, st.integers(-50, 50), st.integers(-50, 50))


def test_omega_identities():
    assert OMEGA * OMEGA == OMEGA2
    assert OMEGA**3 == EisensteinInt(1, 0)
    assert 1 + OMEGA + OMEGA2 == EisensteinInt(0, 0)
    assert SQRT_MINUS_3 * SQRT_MINUS_3 == EisensteinInt(-3, 0)
    one_minus = 1 - OMEGA
    assert one_minus**3 == -3 * SQRT_MINUS_3


@given(eisenstein, eisenstein, eisenstein)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).is_rational()


def test_sech_squared():
    # (2/(e^t + e^-t))^2 = sech^2 t = 1 - t^2 + 2t^4/3 - 17t^6/45 + ...
    assert list(w_higher_series(2, 2, 8)) == [1, 0, -2, 0, 16, 0, -272, 0]


def test_frozen_r3_alpha2():
    assert list(w_higher_series(3, 2, 10)) == [1, 0, 0, -2, 0, 0, 58, 0, 0, -6218]


def test_alpha_one_reduces_to_w_and_e():
    assert list(w_higher_series(3, 1, 31)) == [w_recurrence(11).at(n) for n in range(31)]
    assert list(w_higher_series(2, 1, 21)) == [euler_numbers(11).at(n) for n in range(21)]


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_explicit_matches_series(r, alpha):
    series = w_higher_series(r, alpha, 16)
    assert [w_higher_explicit(r, alpha, n) for n in range(16)] == list(series)


@pytest.mark.parametrize("alpha", [1, 2, 4])
def test_luo_matches_series(alpha):
    series = w_higher_series(2, alpha, 16)
    assert [euler_higher_luo(alpha, n) for n in range(16)] == list(series)


def test_rejections():
    with pytest.raises(InvalidInputError):
        w_higher_series(1, 1, 5)
    with pytest.raises(InvalidInputError):
        w_higher_explicit(4, 1, 5)
    with pytest.raises(InvalidInputError):
        euler_higher_luo(0, 3)
