"""The Delta(x, k) polynomials and central factorial numbers t(n, k), T(n, k).

Delta(x, 0) = 1 and Delta(x, k+1) = (x+1)(2x+1) Delta(x+1, k) - x^2 Delta(x, k).
Its values at x = 0 are the Euler numbers up to sign, and it links Euler
numbers with both kinds of central factorial numbers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exact_core import (
    ConsistencyError,
    InvalidInputError,
    as_integer,
    binomial,
    factorial,
    ps_log,
    ps_pow,
    ps_sqrt,
)
from .lehmer_euler import euler_e

__all__ = [
    "Poly",
    "delta_poly",
    "t_first",
    "t_first_via_product",
    "T_second",
    "T_second_via_basis",
    "central_factorial_poly",
    "gf_check_first",
    "gf_check_second",
    "basis_check_second",
    "thm5_rhs",
    "thm5_check",
    "thm6_lhs",
    "thm6_check",
    "thm6_remark_check",
    "rising_poly",
]


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Dense univariate polynomial with exact (int or Fraction) coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _canon(acc) if isinstance(acc, Fraction) else acc

    def shift(self, c) -> Poly:
        """p(x + c) by binomial re-expansion."""
        out = [0] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            power = 1
            for j in range(i, -1, -1):
                # a * binom(i, j) * x^j * c^(i-j)
                out[j] += a * binomial(i, j) * power
                power *= c
        return Poly(out)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}" if isinstance(mag, int) else f"({mag}){var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += sign + body
        return text


def _lift(p) -> Poly:
    return p if isinstance(p, Poly) else Poly([p])


_X = Poly.x()


@lru_cache(maxsize=None)
def delta_poly(k: int) -> Poly:
    if k < 0:
        raise InvalidInputError("k must be nonnegative")
    if k == 0:
        return Poly([1])
    prev = delta_poly(k - 1)
    return (_X + 1) * (2 * _X + 1) * prev.shift(1) - _X * _X * prev


@lru_cache(maxsize=None)
def t_first(n: int, k: int) -> Fraction:
    """Central factorial number of the first kind, from its two-step recurrence."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    if k < 0 or k > n or (n + k) % 2:
        return Fraction(0)
    if k == n:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    return t_first(n - 2, k - 2) - Fraction((n - 2) ** 2, 4) * t_first(n - 2, k)


@lru_cache(maxsize=None)
def T_second(n: int, k: int) -> Fraction:
    """Central factorial number of the second kind.

    Integral whenever n and k are both even; odd/odd entries such as
    T(3, 1) = 1/4 are genuinely rational, so the value is returned as a Fraction.
    """
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    if k < 0 or k > n or (n + k) % 2:
        return Fraction(0)
    if k == n:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    return T_second(n - 2, k - 2) + Fraction(k * k, 4) * T_second(n - 2, k)


@lru_cache(maxsize=None)
def central_factorial_poly(n: int) -> Poly:
    """x (x + n/2 - 1)(x + n/2 - 2) ... (x - n/2 + 1), n factors in all."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    if n == 0:
        return Poly([1])
    p = _X
    for i in range(1, n):
        p = p * Poly([Fraction(n, 2) - i, 1])
    return p


def t_first_via_product(n: int) -> list[Fraction]:
    """Coefficients t(n, 0..n) read off the expanded central factorial; must match the recurrence."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    p = central_factorial_poly(n)
    coeffs = [Fraction(p[k]) for k in range(n + 1)]
    for k, c in enumerate(coeffs):
        if c != t_first(n, k):
            raise ConsistencyError(f"t({n},{k}): product gives {c}, recurrence {t_first(n, k)}")
    return coeffs


def T_second_via_basis(n: int) -> list[Fraction]:
    """T(n, 0..n) by writing x^n in the central factorial basis (top-down elimination)."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    residual = Poly([0] * n + [1])
    out = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = Fraction(residual[k])  # basis polynomial k is monic of degree k
        out[k] = c
        if c:
            residual = residual - c * central_factorial_poly(k)
    if residual.coeffs:
        raise ConsistencyError("basis elimination left a remainder")
    return out


def basis_check_second(n: int) -> bool:
    if n < 1:
        raise InvalidInputError("n must be positive")
    total = Poly()
    for k in range(n + 1):
        coeff = T_second(n, k)
        if coeff:
            total = total + coeff * central_factorial_poly(k)
    return total == Poly([0] * n + [1])


def _asinh_series(order: int) -> list[Fraction]:
    """2 log(x/2 + sqrt(x^2/4 + 1)) as an ordinary power series."""
    root = ps_sqrt([Fraction(1), Fraction(0), Fraction(1, 4)], order)
    inner = list(root)
    if order > 1:
        inner[1] += Fraction(1, 2)
    return [2 * c for c in ps_log(inner, order)]


def gf_check_first(k: int, N: int) -> bool:
    """Coefficient of x^n in (2 asinh(x/2))^k equals k! t(n, k) / n! for n <= N."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    order = N + 1
    series = ps_pow(_asinh_series(order), k, order)
    return all(series[n] == factorial(k) * t_first(n, k) / factorial(n) for n in range(order))


def gf_check_second(k: int, N: int) -> bool:
    """Coefficient of x^n in (e^{x/2} - e^{-x/2})^k equals k! T(n, k) / n! for n <= N."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    order = N + 1
    diff = [Fraction(1 - (-1) ** n, 2**n * factorial(n)) for n in range(order)]
    series = ps_pow(diff, k, order)
    return all(series[n] == factorial(k) * T_second(n, k) / factorial(n) for n in range(order))


def thm5_rhs(n: int, k: int) -> Fraction:
    """sum_j (-1)^(j-k) (2j)! Delta(j, k) T(2n, 2j) / 2^j."""
    if n < 0 or k < 0:
        raise InvalidInputError("n and k must be nonnegative")
    d = delta_poly(k)
    total = Fraction(0)
    for j in range(n + 1):
        sign = -1 if (j - k) % 2 else 1
        total += Fraction(sign * factorial(2 * j) * d(j), 2**j) * T_second(2 * n, 2 * j)
    return total


def thm5_check(n: int, k: int) -> bool:
    return thm5_rhs(n, k) == euler_e(2 * n + 2 * k)


def rising_poly(n: int) -> Poly:
    """(x + 1)(x + 2) ... (x + 2n)."""
    p = Poly([1])
    for i in range(1, 2 * n + 1):
        p = p * Poly([i, 1])
    return p


def thm6_lhs(n: int) -> Poly:
    """sum_j (-4)^(n-j) t(2n+1, 2j+1) Delta(x, j), with the scaled weights asserted integral."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    total = Poly()
    for j in range(n + 1):
        weight = as_integer((-4) ** (n - j) * t_first(2 * n + 1, 2 * j + 1), f"4^{n - j} t({2 * n + 1},{2 * j + 1})")
        total = total + weight * delta_poly(j)
    return total


def thm6_check(n: int) -> bool:
    lhs = thm6_lhs(n)
    if not lhs.is_integral():
        raise ConsistencyError("left side has non-integral coefficients")
    return lhs == rising_poly(n)


def thm6_remark_check(n: int) -> bool:
    """sum_j 4^(n-j) t(2n+1, 2j+1) E_{2j} = (-1)^n (2n)!."""
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    total = sum(
        (4 ** (n - j) * t_first(2 * n + 1, 2 * j + 1) * euler_e(2 * j) for j in range(n + 1)),
        Fraction(0),
    )
    return total == (-1) ** n * factorial(2 * n)

