"""
Jackson q-derivative and the lattice sum for the q-integral
===========================================================

"""

from fractions import Fraction

from fibroman.fcalc import dpsi, monomial
from fibroman.jackson_q import QParam, dq, int_q_series, int_q_sum, verify_right_inverse
from fibroman.psi_arith import q_gauss

qp = QParam(Fraction(1, 2))
print("d_q x^3 =", dq(qp, monomial(3)))
print("int_q x^2 =", int_q_series(qp, monomial(2)))

# partial sums of (1-q) z sum phi(q^k z) q^k approach the closed form 4/7
for K in (1, 5, 20, 200):
    print(K, float(int_q_sum(qp, monomial(2), 1, K)))

print("d_q o int_q = id up to degree 32:", verify_right_inverse(qp, 32))

# the Gaussian psi-instance reproduces d_q
print(dq(qp, monomial(5)) == dpsi(q_gauss(qp.q), monomial(5)))

# q -> 1 recovers the ordinary derivative
near_one = QParam(1 - Fraction(1, 10**6))
print(float(dq(near_one, monomial(10))[9]))
