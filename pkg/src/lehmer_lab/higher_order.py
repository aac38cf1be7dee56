"""Higher-order Lehmer-Euler numbers W_{r,n}^{(alpha)}.

These are the EGF coefficients of (sum_l t^{rl}/(rl)!)^{-alpha}; r = 3,
alpha = 1 gives W_n and r = 2 gives the (higher-order) Euler numbers.  The
series route works for any r.  The multinomial closed form is evaluated
exactly only for r = 2 (plain integers) and r = 3 (Eisenstein integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_core import (
    EGF,
    ConsistencyError,
    InvalidInputError,
    as_integer,
    binomial,
    factorial,
    series_pow,
)

__all__ = [
    "EisensteinInt",
    "OMEGA",
    "OMEGA2",
    "SQRT_MINUS_3",
    "HigherWTable",
    "w_higher_series",
    "w_higher_explicit",
    "euler_higher_luo",
]


def _canon(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class EisensteinInt:
    """a + b*omega with omega a primitive cube root of unity (omega^2 = -1 - omega).

    Components may be ints or Fractions; closed-form sums divide by 3 along
    the way, so rational components are allowed.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _canon(Fraction(a)) if isinstance(a, Fraction) else a
        self.b = _canon(Fraction(b)) if isinstance(b, Fraction) else b

    @staticmethod
    def _lift(other) -> EisensteinInt:
        if isinstance(other, EisensteinInt):
            return other
        return EisensteinInt(other, 0)

    def __add__(self, other):
        o = self._lift(other)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        bd = self.b * o.b
        return EisensteinInt(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, EisensteinInt):
            raise TypeError("division only by rational scalars")
        return EisensteinInt(Fraction(self.a) / scalar, Fraction(self.b) / scalar)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = EisensteinInt(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = EisensteinInt(other, 0)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def conjugate(self) -> EisensteinInt:
        # conj(w) = w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction | int:
        if self.b != 0:
            raise ConsistencyError(f"{self} has a nonzero omega component")
        return self.a

    def __repr__(self):
        return f"EisensteinInt({self.a}, {self.b})"


OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
SQRT_MINUS_3 = EisensteinInt(1, 2)  # 1 + 2w squares to -3


@dataclass(frozen=True)
class HigherWTable:
    """W_{r,n}^{(alpha)} for raw indices n < N (zero off multiples of r)."""

    r: int
    alpha: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


def w_higher_series(r: int, alpha: int, N: int) -> HigherWTable:
    if r < 2 or alpha < 1 or N < 1:
        raise InvalidInputError(f"need r >= 2, alpha >= 1, N >= 1; got {r}, {alpha}, {N}")
    order = (N - 1) // r + 1
    values = series_pow(EGF([1] * order, r), -alpha).expand().integer_values()
    values += [0] * (N - len(values))  # the expansion stops at the last multiple of r
    return HigherWTable(r, alpha, tuple(values[:N]))


@lru_cache(maxsize=None)
def _root_sum(r: int, k: int, n: int):
    """sum over i_1+..+i_r = k of k!/(i_1!..i_r!) * (i_1 + i_2 z + .. + i_r z^{r-1})^n."""
    fk = factorial(k)
    if r == 2:
        # i1 + i2 * (-1)
        return sum(
            fk // (factorial(i1) * factorial(k - i1)) * (i1 - (k - i1)) ** n for i1 in range(k + 1)
        )
    total = EisensteinInt(0, 0)
    for i1 in range(k + 1):
        for i2 in range(k - i1 + 1):
            i3 = k - i1 - i2
            coeff = fk // (factorial(i1) * factorial(i2) * factorial(i3))
            # i1 + i2 w + i3 w^2 = (i1 - i3) + (i2 - i3) w
            total = total + coeff * EisensteinInt(i1 - i3, i2 - i3) ** n
    return total


def w_higher_explicit(r: int, alpha: int, n: int) -> int:
    """Multinomial closed form, exact for r in {2, 3}."""
    if r not in (2, 3):
        raise InvalidInputError("exact explicit formula is implemented for r = 2 and r = 3 only")
    if alpha < 1 or n < 0:
        raise InvalidInputError("need alpha >= 1 and n >= 0")
    total = Fraction(0)
    acc = EisensteinInt(0, 0)
    for k in range(n + 1):
        weight = Fraction((-1) ** k, r**k) * binomial(alpha + k - 1, k) * binomial(alpha + n, n - k)
        inner = _root_sum(r, k, n)
        if r == 2:
            total += weight * inner
        else:
            acc = acc + weight * inner
    if r == 3:
        total = Fraction(acc.to_rational())
    return as_integer(total, f"W_{{{r},{n}}}^({alpha})")


def euler_higher_luo(alpha: int, n: int) -> int:
    """Higher-order Euler number E_n^{(alpha)} from the r = 2 closed form."""
    if alpha < 1 or n < 0:
        raise InvalidInputError("need alpha >= 1 and n >= 0")
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum(binomial(k, j) * (k - 2 * j) ** n for j in range(k + 1))
        total += Fraction((-1) ** k, 2**k) * binomial(alpha + n, n - k) * binomial(alpha + k - 1, k) * inner
    return as_integer(total, f"E_{n}^({alpha})")
