import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lehmer_lab.exact_core import (
    EGF,
    ConsistencyError,
    InvalidInputError,
    LowerHessenberg,
    as_integer,
    binomial,
    compositions,
    factorial,
    hessenberg_det,
    multinomial,
    partitions_multiplicity,
    ps_inv,
    ps_log,
    ps_mul,
    ps_pow,
    ps_sqrt,
    series_invert,
    series_pow,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def leibniz_det(rows):
    """Permutation-sum determinant, the slow oracle."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


@st.composite
def hessenberg(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    entries = {(i, j): draw(fractions) for i in range(n) for j in range(min(i + 2, n))}
    return LowerHessenberg.from_entries(n, lambda i, j: entries[i, j])


@given(hessenberg())
def test_hessenberg_det_matches_leibniz(mat):
    assert hessenberg_det(mat) == leibniz_det(mat.to_dense())


def test_hessenberg_dense_shape():
    mat = LowerHessenberg.from_entries(3, lambda i, j: i * 3 + j + 1)
    dense = mat.to_dense()
    assert dense[0] == [1, 2, 0]
    assert dense[2] == [7, 8, 9]
    assert hessenberg_det(mat) == leibniz_det(dense) == 9


def test_factorial_and_binomial():
    assert [factorial(n) for n in range(8)] == [1, 1, 2, 6, 24, 120, 720, 5040]
    assert factorial(40) == math.factorial(40)
    assert binomial(30, 9) == 14307150
    assert binomial(5, 7) == 0
    with pytest.raises(InvalidInputError):
        factorial(-1)


def test_as_integer():
    assert as_integer(Fraction(12, 3)) == 4
    with pytest.raises(ConsistencyError):
        as_integer(Fraction(1, 3))


@st.composite
def invertible_egf(draw):
    step = draw(st.integers(1, 3))
    head = draw(fractions.filter(bool))
    tail = draw(st.lists(fractions, min_size=0, max_size=7))
    return EGF([head] + tail, step)


@given(invertible_egf())
def test_series_invert_is_an_involution(f):
    g = series_invert(f)
    assert series_invert(g) == f
    assert (f * g).coeffs == EGF.one(f.order, f.step).coeffs


@given(invertible_egf(), st.integers(-3, 3))
def test_series_pow_matches_repeated_product(f, e):
    base = f if e >= 0 else series_invert(f)
    expected = EGF.one(f.order, f.step)
    for _ in range(abs(e)):
        expected = expected * base
    assert series_pow(f, e) == expected


def test_exponential_squared():
    # e^t * e^t = e^{2t}: every EGF coefficient of the product is 2^n
    e = EGF([1] * 10)
    assert (e * e).integer_values() == [2**n for n in range(10)]


def test_expand_and_section_roundtrip():
    f = EGF([1, 2, 3], 3)
    flat = f.expand()
    assert flat.coeffs == (1, 0, 0, 2, 0, 0, 3)
    assert flat.section(3) == f
    with pytest.raises(InvalidInputError):
        EGF([1, 1]).section(2)


def test_invert_rejects_zero_constant():
    with pytest.raises(InvalidInputError):
        series_invert(EGF([0, 1]))


@pytest.mark.parametrize("n", range(1, 13))
def test_unrestricted_composition_count(n):
    comps = list(compositions(n))
    assert len(comps) == 2 ** (n - 1)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == n for c in comps)


def partition_count(n, lo=1, hi=None):
    hi = n if hi is None else hi
    ways = [1] + [0] * n
    for part in range(lo, hi + 1):
        for s in range(part, n + 1):
            ways[s] += ways[s - part]
    return ways[n]


@pytest.mark.parametrize("n", range(1, 16))
def test_partition_count_matches_dp(n):
    parts = list(partitions_multiplicity(n))
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    for mult in parts:
        assert len(mult) == n
        assert sum(part * t for part, t in enumerate(mult, start=1)) == n


@pytest.mark.parametrize("lo,hi", [(2, None), (1, 3), (2, 4)])
def test_bounded_parts(lo, hi):
    for n in range(1, 13):
        comps = list(compositions(n, lo, hi))
        assert all(lo <= p <= (hi or n) for c in comps for p in c)
        assert len(list(partitions_multiplicity(n, lo, hi))) == partition_count(n, lo, hi)


def test_enumeration_rejects_empty_targets():
    with pytest.raises(InvalidInputError):
        list(compositions(0))
    with pytest.raises(InvalidInputError):
        list(partitions_multiplicity(3, min_part=0))
    assert list(compositions(3, 4)) == []


def test_deep_compositions_do_not_recurse():
    # 1,346,269 compositions; the all-twos one comes last lexicographically
    last = None
    for last in compositions(30, 1, 2):
        pass
    assert last == (2,) * 15


def test_multinomial():
    assert multinomial([2, 1, 1]) == 12
    assert multinomial([]) == 1
    assert multinomial([3, 3, 3]) == math.factorial(9) // 216


def test_ordinary_series_helpers():
    one_minus_x = [Fraction(1), Fraction(-1)]
    geometric = ps_inv(one_minus_x, 6)
    assert geometric == [1] * 6
    assert ps_mul(geometric, one_minus_x, 6) == [1, 0, 0, 0, 0, 0]
    square = ps_pow([Fraction(1), Fraction(1)], 2, 5)
    assert square == [1, 2, 1, 0, 0]
    assert ps_sqrt(square, 5)[:3] == [1, 1, 0]
    # log(1/(1-x)) = sum x^n / n
    assert ps_log(geometric, 6) == [0] + [Fraction(1, n) for n in range(1, 6)]
