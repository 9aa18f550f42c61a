"""Congruences between the forms F_nu = sum a^(q^nu) t_a.

F_nu and F_{nu-1} agree modulo a high power of [1] = T^q - T, h and F_3 agree
modulo [2]^q, and nothing better holds at the next level; the first failing
coefficient is printed.
"""

from drinfeld import forms
from drinfeld.algebra import field_from_q
from drinfeld.verify import Modulus, congruence_exponent, congruent_mod

F = field_from_q(3)
N = 60

Fs = {nu: forms.F_nu(F, nu, N).series for nu in range(1, 5)}
for nu in range(2, 5):
    # F_nu = F_{4,1,nu-1}: primes of degree 1, shift nu - 2
    e = congruence_exponent(F, 4, 1, nu - 2)
    r = congruent_mod(Fs[nu], Fs[nu - 1], Modulus.bracket(F, 1, e))
    print(f"F_{nu} = F_{nu - 1} mod [1]^{e}: {r.holds}")

r = congruent_mod(Fs[1], Fs[3], Modulus.bracket(F, 2, 3))
print("h = F_3 mod [2]^3:", r.holds)
r = congruent_mod(Fs[1], Fs[3], Modulus.bracket(F, 3))
print(f"h = F_3 mod [3]: {r.holds} (first failure at t^{r.witness}, prime {r.prime})")
