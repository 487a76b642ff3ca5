"""
Jackson q-derivative and q-integral on truncated series, with the
lattice-sum form of the q-integral over q^k z.
"""

from dataclasses import dataclass
from fractions import Fraction

from .fcalc import FormalSeries, _map_monomials, d0, monomial

__all__ = ["QParam", "q_number", "q_scale", "dq", "dq_operator", "int_q_series",
           "int_q_sum", "int_q_sum_error", "verify_right_inverse"]


@dataclass(frozen=True)
class QParam:
    q: Fraction

    def __post_init__(self):
        q = Fraction(self.q)
        if q == 0 or q == 1:
            raise ValueError("q must differ from 0 and 1, got %s" % q)
        object.__setattr__(self, "q", q)


def q_number(qp: QParam, n: int) -> Fraction:
    """[n]_q = (1 - q^n) / (1 - q)."""
    return (1 - qp.q**n) / (1 - qp.q)


def q_scale(qp: QParam, s: FormalSeries) -> FormalSeries:
    """(Q f)(x) = f(q x)."""
    return _map_monomials(s, lambda n: (n, qp.q**n))


def dq(qp: QParam, s: FormalSeries) -> FormalSeries:
    return _map_monomials(s, lambda n: (n - 1, q_number(qp, n)) if n >= 1 else None)


def dq_operator(qp: QParam, s: FormalSeries) -> FormalSeries:
    """dq spelled out as ((1 - q Q) / (1 - q)) o d0."""
    t = d0(s)
    return (t - qp.q * q_scale(qp, t)) * (1 / (1 - qp.q))


def int_q_series(qp: QParam, s: FormalSeries) -> FormalSeries:
    return _map_monomials(s, lambda n: (n + 1, 1 / q_number(qp, n + 1)))


def int_q_sum(qp: QParam, phi: FormalSeries, z, K: int) -> Fraction:
    """K-term partial sum of (1 - q) z sum_k phi(q^k z) q^k, exactly."""
    if K < 1:
        raise ValueError("need K >= 1")
    z = Fraction(z)
    q = qp.q
    total = Fraction(0)
    qk = Fraction(1)
    for _ in range(K):
        total += phi.evaluate(qk * z) * qk
        qk *= q
    return (1 - q) * z * total


def int_q_sum_error(qp: QParam, n: int, z, K: int) -> Fraction:
    """Closed-form value minus K-term partial sum, for phi = x^n."""
    q = qp.q
    z = Fraction(z)
    return z ** (n + 1) * (1 - q) * q ** ((n + 1) * K) / (1 - q ** (n + 1))


def verify_right_inverse(qp: QParam, N: int) -> bool:
    """dq(int_q(x^n)) == x^n for every n <= N."""
    for n in range(N + 1):
        x_n = monomial(n, N + 1)
        if dq(qp, int_q_series(qp, x_n)) != x_n:
            return False
    return True
