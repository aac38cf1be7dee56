"""Lehmer-Euler numbers: the trisected analogue of the Euler numbers.

1 / (1 + t^3/3! + t^6/6! + ...) = sum W_n t^n / n!, and W_n vanishes unless
3 | n.  Five independent routes compute W_{3n}; they must agree exactly.
"""

import time

from lehmer_lab.lehmer_euler import (
    compare_methods,
    euler_numbers,
    inversion_det_check,
    w_determinant,
    w_explicit,
    w_recurrence,
    w_trudi,
)

w = w_recurrence(11)
print("W_{3n}, n = 0..10")
for n, value in enumerate(w):
    print(f"  W_{3 * n:<3d} = {value}")

# Each single-index method on one value
n = 6
print(f"\nW_{3 * n} four ways:")
print("  recurrence  ", w[n])
print("  determinant ", w_determinant(n))
print("  Trudi sum   ", w_trudi(n))
print("  explicit    ", w_explicit(n))

start = time.perf_counter()
tables, mismatches = compare_methods(41)
print(f"\nrecurrence, series, determinant, Trudi agree for n < 41: {not mismatches} "
      f"({time.perf_counter() - start:.1f}s)")
print("W_120 has", len(str(abs(tables["series"][40]))), "digits")

print("\nsigns alternate:", all((-1) ** n * v > 0 for n, v in enumerate(w_recurrence(100))))
print("inversion determinant gives (-1)^n/(3n)! for n <= 10:", all(inversion_det_check(n) for n in range(1, 11)))

print("\nfor comparison, the bisected case gives Euler numbers:", list(euler_numbers(8)))
