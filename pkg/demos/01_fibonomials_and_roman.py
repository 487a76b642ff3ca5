"""
Fibonomials and Roman coefficients on all of Z
==============================================

"""

from fractions import Fraction

from fibroman import (CLASSIC, FIBONACCI, case_formula, fibonomial, identity_sweep,
                      roman_coefficient, roman_factorial)
from fibroman.psi_arith import format_rational

# The fibonomial triangle, F_n! / (F_k! F_(n-k)!)
for n in range(9):
    print(" ".join(str(fibonomial(n, k)) for k in range(n + 1)).center(60))

# Roman factorials extend n_F! to negative n
print([format_rational(roman_factorial(FIBONACCI, n)) for n in range(-6, 6)])

# and the coefficients become rationals outside the nonnegative quadrant
print("[0 3]_F =", roman_coefficient(FIBONACCI, 0, 3))
print("[-2 2]_F =", roman_coefficient(FIBONACCI, -2, 2))

# the closed forms for negative upper index agree with the factorial ratios
for n, k in [(-1, 2), (-2, 1), (-3, -5)]:
    print((n, k), case_formula(FIBONACCI, n, k), roman_coefficient(FIBONACCI, n, k))

# symmetry holds everywhere; the additive Pascal rule does not survive the
# Fibonacci deformation, even for nonnegative n, k
for inst in (CLASSIC, FIBONACCI):
    for identity in ("symmetry", "pascal"):
        report = identity_sweep(inst, (-12, 12), identity)
        print(inst.name, identity, len(report.violations), "violations")
print("[4 2]_F =", roman_coefficient(FIBONACCI, 4, 2),
      "but [3 1]_F + [3 2]_F =", roman_coefficient(FIBONACCI, 3, 1) + roman_coefficient(FIBONACCI, 3, 2))
