"""Hecke eigenvalues of f_{k,n} and of forms without A-expansions.

Every f_{k,n} that satisfies the hypothesis is an eigenform with eigenvalue
p^n at every prime p.  h^2 g^2 (q = 3) also has eigenvalues p^4, yet no
A-expansion with exponent 4 reproduces its t-expansion.
"""

from drinfeld import forms
from drinfeld.algebra import field_from_q, irreducible_enum
from drinfeld.hecke import eigen_solve, prime_power_exponent

F = field_from_q(3)
n_out = 20
primes = irreducible_enum(F, 1) + irreducible_enum(F, 2)[:1]

for k, n in [(4, 1), (10, 1), (8, 2), (14, 2)]:
    f = forms.f_kn(F, k, n, n_out * 9)
    exps = [prime_power_exponent(eigen_solve(f, P, n_out), P, k) for P in primes]
    print(f"f_{{{k},{n}}}: eigenvalue exponents {exps}")

h2g2 = forms.gh_monomial(F, 2, 2, n_out * 9)
print("h^2 g^2 eigenvalues:", [str(eigen_solve(h2g2, P, n_out)) for P in primes])
try:
    forms.aexp_recover(h2g2.series, 4)
except forms.Inconsistent as exc:
    print("recovery with n = 4:", exc)
