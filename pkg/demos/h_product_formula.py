"""The cusp form h three ways.

h is built as the A-expansion sum a^q t_a, compared with the product
t * prod psi_a(t)^(q^2 - 1), and its powers h^j (j <= q) are compared with
the A-expansions sum a^(qj) t_a^j.

    python demos/h_product_formula.py [q] [precision]
"""

import sys

from drinfeld import forms
from drinfeld.algebra import field_from_q, monic_enum
from drinfeld.carlitz import psi_series
from drinfeld.series import TruncSeries


def product_side(F, N):
    q = F.q
    acc = TruncSeries.one(F, N - 1)
    d = 1
    # psi_a = 1 + O(t^(q^d - q^(d-1))), so high degrees cannot reach t^N
    while q**d - q ** (d - 1) <= N - 1:
        for a in monic_enum(F, d):
            acc = acc * psi_series(a, N - 1) ** (q * q - 1)
        d += 1
    return acc.shift(1)


def main():
    q = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    N = int(sys.argv[2]) if len(sys.argv) > 2 else 40
    F = field_from_q(q)
    h = forms.h(F, N)
    print("h =", h.series)
    print("matches the product formula:", h.series == product_side(F, N))
    for j in range(2, q + 1):
        ax = forms.AExpansion.power_law(F, j, q * j)
        print(f"h^{j} == sum a^{q * j} t_a^{j}:", forms.expand(ax, N) == (h**j).series)


if __name__ == "__main__":
    main()
