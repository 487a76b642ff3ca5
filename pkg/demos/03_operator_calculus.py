"""
The noncommutative *_F product and F-integration
================================================

"""

from fractions import Fraction

from fibroman import FIBONACCI as F
from fibroman.fcalc import (definite_int_psi, delta_psi, dpsi, exp_psi, exp_series,
                            int_psi, monomial, ordinary_d, polynomial, star, star_power)

x2, x3 = monomial(2), monomial(3)

# x^2 *_F x^3 and x^3 *_F x^2 differ
print(star(F, x2, x3), "vs", star(F, x3, x2))

# *_F powers of x carry the weight n!/n_F!, and dF lowers them like D does x^n
for n in range(1, 6):
    print(n, star_power(F, n, 16), "->", dpsi(F, star_power(F, n, 16)))

# exp(a x) *_F exp_F(b x) = exp_F((a + b) x)
a, b = Fraction(1, 2), 2
print(star(F, exp_series(a), exp_psi(F, b)) == exp_psi(F, a + b))

# mixed Leibniz rule: D on the left factor, dF on the right
f, g = polynomial([1, -2, Fraction(1, 3)], 16), polynomial([0, 5, 0, 7], 16)
print(dpsi(F, star(F, f, g)) == star(F, ordinary_d(f), g) + star(F, f, dpsi(F, g)))

# F-integration is a right inverse of dF
p = polynomial([3, 1, 4, 1, 5], 16)
print(dpsi(F, int_psi(F, p)) == p, "  int_0^1 x^3 d_F x =", definite_int_psi(F, x3, 0, 1))

# the F-difference exp_F(dF) - id
print("Delta_F x^4 =", delta_psi(F, monomial(4)))
