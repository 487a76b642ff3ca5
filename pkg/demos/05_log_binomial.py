"""
Fib-harmonic logarithms and the logarithmic binomial expansion
==============================================================

"""

from fractions import Fraction

from fibroman.harmonic import (LogElement, binomiality_check, dF_inv_on_L, dF_on_L,
                               fib_harmonic, generalized_shift, inverse_pair_exceptions,
                               log_binomial_rhs, residual_study)

# Fib-harmonic numbers 1 + 1/2_F + ... + 1/n_F
print([str(fib_harmonic(n)) for n in range(7)])

# dF lowers the index with weight [n_F]; its inverse raises it back
phi = LogElement.basis
print(dF_on_L(phi(1, 0)), dF_inv_on_L(phi(1, -1)))
print("exceptions:", inverse_pair_exceptions())

# polynomial case: the shift of x^n carries the fibonomial row
print(binomiality_check(6))
print(generalized_shift(0, 3, Fraction(1, 2)))

# negative index, log level: sum_k [-1 k] phi_(-1-k)(a) x^k -> 1/(a + x)
a, x = Fraction(4), Fraction(1, 4)
print(float(log_binomial_rhs(1, -1, a, x, 40)), float(1 / (a + x)))
for K, r in residual_study(1, -1, a, x):
    print("K=%d residual %.3e" % (K, r))
