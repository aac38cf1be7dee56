from fractions import Fraction

import pytest

from lehmer_lab.central_factorial import (
    Poly,
    T_second,
    T_second_via_basis,
    basis_check_second,
    central_factorial_poly,
    delta_poly,
    gf_check_first,
    gf_check_second,
    rising_poly,
    t_first,
    t_first_via_product,
    thm5_check,
    thm6_check,
    thm6_lhs,
    thm6_remark_check,
)
from lehmer_lab.exact_core import InvalidInputError
from lehmer_lab.lehmer_euler import euler_e


def test_first_delta_polynomials():
    assert delta_poly(0) == Poly([1])
    assert delta_poly(1).coeffs == (1, 3, 1)
    assert delta_poly(2).coeffs == (5, 20, 25, 10, 1)
    assert delta_poly(3).coeffs == (61, 287, 490, 385, 140, 21, 1)
    assert str(delta_poly(1)) == "x^2+3x+1"


@pytest.mark.parametrize("k", range(13))
def test_delta_at_zero_is_signed_euler(k):
    d = delta_poly(k)
    assert d.degree == 2 * k
    assert d.is_integral()
    assert d(0) == (-1) ** k * euler_e(2 * k)


def test_small_central_factorial_values():
    assert t_first(3, 1) == Fraction(-1, 4)
    assert T_second(3, 1) == Fraction(1, 4)
    # x^[6] = x^2 (x^2 - 1)(x^2 - 4)
    assert [t_first(6, k) for k in (2, 4, 6)] == [4, -5, 1]
    assert [T_second(6, k) for k in (2, 4, 6)] == [1, 5, 1]
    assert t_first(5, 2) == 0 and T_second(4, 0) == 0


@pytest.mark.parametrize("n", range(1, 15))
def test_recurrences_match_definitions(n):
    assert t_first_via_product(n) == [t_first(n, k) for k in range(n + 1)]
    assert T_second_via_basis(n) == [T_second(n, k) for k in range(n + 1)]
    assert basis_check_second(n)


def test_even_second_kind_is_integral():
    for n in range(0, 15, 2):
        assert all(T_second(n, k).denominator == 1 for k in range(n + 1))


def test_central_factorial_poly():
    assert central_factorial_poly(3) == Poly([0, Fraction(-1, 4), 0, 1])


@pytest.mark.parametrize("k", range(1, 6))
def test_generating_functions(k):
    assert gf_check_first(k, 14)
    assert gf_check_second(k, 14)


def test_theorem5():
    assert all(thm5_check(n, k) for n in range(11) for k in range(11))


def test_theorem6():
    assert thm6_lhs(1) == Poly([2, 3, 1])
    assert all(thm6_check(n) for n in range(11))
    assert all(thm6_remark_check(n) for n in range(11))
    assert rising_poly(0) == Poly([1])


def test_poly_arithmetic():
    x = Poly.x()
    p = (x + 1) * (x - 1)
    assert p == Poly([-1, 0, 1])
    assert p.shift(1) == Poly([0, 2, 1])
    assert str(Poly([0, -1, 0, 2])) == "2x^3-x"
    assert str(Poly()) == "0"
    assert Poly([1, 2, 0, 0]).degree == 1
    assert p(Fraction(1, 2)) == Fraction(-3, 4)


def test_rejections():
    with pytest.raises(InvalidInputError):
        delta_poly(-1)
    with pytest.raises(InvalidInputError):
        gf_check_first(0, 4)
