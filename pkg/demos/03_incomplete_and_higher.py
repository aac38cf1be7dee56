"""Two generalisations: truncating the denominator series, and raising its reciprocal to a power."""

from lehmer_lab.higher_order import euler_higher_luo, w_higher_explicit, w_higher_series
from lehmer_lab.incomplete import (
    w_ge_determinant,
    w_ge_explicit,
    w_ge_recurrence,
    w_ge_trudi,
    w_le_recurrence,
)
from lehmer_lab.lehmer_euler import w_recurrence

print("restricted W_{3n,<=m}: only t^{3l}/(3l)! with l <= m kept")
for m in (1, 2, 3):
    print(f"  m={m}:", list(w_le_recurrence(7, m)))
print("  full  :", list(w_recurrence(7)))

print("\nassociated W_{3n,>=m}: terms with 1 <= l < m dropped, so a block of zeros appears")
for m in (1, 2, 3):
    print(f"  m={m}:", list(w_ge_recurrence(7, m)))

n, m = 9, 2
print(f"\nW_{{{3 * n},>={m}}} by recurrence, determinant, Trudi, explicit:",
      w_ge_recurrence(n + 1, m)[n], w_ge_determinant(n, m), w_ge_trudi(n, m), w_ge_explicit(n, m))

print("\nhigher order: (r / sum_j e^{z^j t})^alpha")
for r, alpha in ((2, 1), (2, 2), (3, 1), (3, 2)):
    print(f"  r={r} alpha={alpha}:", [v for v in w_higher_series(r, alpha, 13) if v])

alpha = 3
print(f"\nclosed forms against the series, r = 2 and 3, alpha = {alpha}, n <= 12:")
s2, s3 = w_higher_series(2, alpha, 13), w_higher_series(3, alpha, 13)
print("  Luo (r=2):      ", all(euler_higher_luo(alpha, n) == s2[n] for n in range(13)))
print("  explicit (r=2): ", all(w_higher_explicit(2, alpha, n) == s2[n] for n in range(13)))
print("  explicit (r=3): ", all(w_higher_explicit(3, alpha, n) == s3[n] for n in range(13)))
