"""Read the A-expansion coefficients back off a t-expansion.

The t-expansion of f_{10,1} is computed, then the coefficients c_a are
recovered by exact linear algebra and compared with a^9.
"""

from drinfeld import forms
from drinfeld.algebra import RatK, field_from_q

F = field_from_q(3)
N = 200

f = forms.f_kn(F, 10, 1, N)
ax = forms.aexp_recover(f.series, 1)
print(f"precision {N} determines every c_a with deg a <= {ax.D}")
ok = all(c == RatK.of(a**9) for a, c in ax.items())
print("c_a = a^9 for all of them:", ok)
for a, c in list(ax.items())[:5]:
    print(f"  c_({a}) = {c}")
