"""
Truncated formal power series over Q and the psi-operator calculus on them.

Operators provided (all parametrised by a PsiInstance where it matters):

    d0           x^n -> x^(n-1)                 (divided difference)
    dpsi         x^n -> n_psi x^(n-1)           (= nhat o d0)
    ordinary_d   x^n -> n x^(n-1)
    xhat         x^n -> (n+1)/(n+1)_psi x^(n+1)
    star         f *_psi g = f(xhat) g          (noncommutative)
    int_psi      x^n -> x^(n+1)/(n+1)_psi

Every series carries a truncation order N.  Operators that would create
degrees above N drop them and set ``truncated`` on the result.
"""

import math
from fractions import Fraction

from .psi_arith import PsiInstance, format_rational, parse_rational, psi_factorial

__all__ = [
    "FormalSeries", "monomial", "polynomial", "d0", "nhat", "dpsi",
    "ordinary_d", "xhat", "apply_xhat_poly", "star", "star_power",
    "exp_series", "exp_psi", "exp_xhat_one", "delta_psi", "int_psi",
    "definite_int_psi",
]


class FormalSeries:
    """Immutable truncated power series sum_{n<=order} c_n x^n with c_n in Q."""

    __slots__ = ("_coeffs", "order", "truncated")

    def __init__(self, coeffs=None, order=16, truncated=False):
        if order < 0:
            raise ValueError("order must be >= 0")
        clean = {}
        dropped = False
        for n, c in (coeffs or {}).items():
            n = int(n)
            if n < 0:
                raise ValueError("negative degree %d" % n)
            c = Fraction(c)
            if c == 0:
                continue
            if n > order:
                dropped = True
                continue
            clean[n] = clean.get(n, 0) + c
        self._coeffs = {n: c for n, c in clean.items() if c != 0}
        self.order = order
        self.truncated = truncated or dropped

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs.get(n, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    @property
    def degree(self):
        return max(self._coeffs, default=-1)

    def is_zero(self):
        return not self._coeffs

    def with_order(self, order):
        return FormalSeries(self._coeffs, order, self.truncated)

    def _combine(self, other, sign):
        if not isinstance(other, FormalSeries):
            other = FormalSeries({0: other}, self.order)
        order = min(self.order, other.order)
        out = {n: c for n, c in self._coeffs.items() if n <= order}
        for n, c in other._coeffs.items():
            if n <= order:
                out[n] = out.get(n, 0) + sign * c
        return FormalSeries(out, order, self.truncated or other.truncated)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        if isinstance(scalar, FormalSeries):
            return NotImplemented  # the plain Cauchy product is not needed here
        scalar = Fraction(scalar)
        return FormalSeries({n: scalar * c for n, c in self._coeffs.items()},
                            self.order, self.truncated)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = {n: c for n, c in self._coeffs.items() if n <= order}
        b = {n: c for n, c in other._coeffs.items() if n <= order}
        return a == b

    def __hash__(self):
        return hash(tuple(self.items()))

    def evaluate(self, x):
        """Exact value at a rational point (Horner)."""
        x = Fraction(x)
        acc = Fraction(0)
        for n in range(self.degree, -1, -1):
            acc = acc * x + self[n]
        return acc

    def evaluate_float(self, x: float) -> float:
        acc = 0.0
        for n in range(self.degree, -1, -1):
            acc = acc * x + float(self[n])
        return acc

    def to_json(self):
        return {
            "order": self.order,
            "truncated": self.truncated,
            "coefficients": {str(n): format_rational(c) for n, c in self.items()},
        }

    @classmethod
    def from_json(cls, data):
        return cls({int(n): parse_rational(c) for n, c in data["coefficients"].items()},
                   data["order"], data.get("truncated", False))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for n, c in self.items():
            mag = abs(c)
            if n == 0:
                body = format_rational(mag)
            else:
                xs = "x" if n == 1 else "x^%d" % n
                body = xs if mag == 1 else "%s %s" % (format_rational(mag), xs)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "FormalSeries(%s; order=%d%s)" % (self, self.order,
                                                 ", truncated" if self.truncated else "")


def monomial(n, order=16, coeff=1):
    return FormalSeries({n: coeff}, order)


def polynomial(coeffs, order=None):
    """Series from a list [c0, c1, ...]; order defaults to the length - 1."""
    if order is None:
        order = max(len(coeffs) - 1, 0)
    return FormalSeries(dict(enumerate(coeffs)), order)


def _map_monomials(s, rule, order=None):
    order = s.order if order is None else order
    out = {}
    dropped = False
    for n, c in s.items():
        image = rule(n)
        if image is None:
            continue
        m, w = image
        if m > order:
            dropped = True
            continue
        out[m] = out.get(m, 0) + c * w
    return FormalSeries(out, order, s.truncated or dropped)


def d0(s: FormalSeries) -> FormalSeries:
    return _map_monomials(s, lambda n: (n - 1, 1) if n >= 1 else None)


def nhat(inst: PsiInstance, s: FormalSeries) -> FormalSeries:
    """x^(n-1) -> n_psi x^(n-1)."""
    return _map_monomials(s, lambda m: (m, inst.bracket(m + 1)))


def dpsi(inst: PsiInstance, s: FormalSeries) -> FormalSeries:
    return nhat(inst, d0(s))


def ordinary_d(s: FormalSeries) -> FormalSeries:
    return _map_monomials(s, lambda n: (n - 1, n) if n >= 1 else None)


def xhat(inst: PsiInstance, s: FormalSeries) -> FormalSeries:
    return _map_monomials(s, lambda n: (n + 1, Fraction(n + 1) / inst.bracket(n + 1)))


def apply_xhat_poly(inst: PsiInstance, f: FormalSeries, s: FormalSeries) -> FormalSeries:
    """f(xhat) applied to s, by repeated application of ``xhat``."""
    acc = FormalSeries({}, s.order)
    power = s
    for i in range(f.degree + 1):
        if f[i]:
            acc = acc + f[i] * power
        if i < f.degree:
            power = xhat(inst, power)
    return FormalSeries(acc.coeffs, s.order, acc.truncated or power.truncated)


def _xhat_weight(inst, n, i):
    # xhat^i x^n = w x^(n+i)
    w = Fraction(1)
    for j in range(1, i + 1):
        w *= Fraction(n + j) / inst.bracket(n + j)
    return w


def star(inst: PsiInstance, f: FormalSeries, g: FormalSeries) -> FormalSeries:
    """f *_psi g: f(xhat) acting on g, extended linearly over g's monomials."""
    order = min(f.order, g.order)
    out = {}
    dropped = False
    for n, gn in g.items():
        for i, fi in f.items():
            if n + i > order:
                dropped = True
                continue
            out[n + i] = out.get(n + i, 0) + fi * gn * _xhat_weight(inst, n, i)
    return FormalSeries(out, order, f.truncated or g.truncated or dropped)


def star_power(inst: PsiInstance, n: int, order: int = 16) -> FormalSeries:
    """x^(n *_psi) = n!/n_psi! x^n."""
    if n < 0:
        raise ValueError("star power needs n >= 0")
    if n > order:
        raise ValueError("star power %d exceeds truncation order %d" % (n, order))
    return monomial(n, order, Fraction(math.factorial(n)) / psi_factorial(inst, n))


def exp_series(alpha, order=16) -> FormalSeries:
    """Ordinary exp(alpha x)."""
    alpha = Fraction(alpha)
    return FormalSeries({k: alpha**k / math.factorial(k) for k in range(order + 1)}, order)


def exp_psi(inst: PsiInstance, alpha, order=16) -> FormalSeries:
    alpha = Fraction(alpha)
    return FormalSeries({k: alpha**k / psi_factorial(inst, k) for k in range(order + 1)}, order)


def exp_xhat_one(inst: PsiInstance, alpha, order=16) -> FormalSeries:
    """exp(alpha xhat) 1, summed term by term with iterated xhat."""
    alpha = Fraction(alpha)
    acc = FormalSeries({}, order)
    term = monomial(0, order)
    for k in range(order + 1):
        acc = acc + term
        term = xhat(inst, term) * (alpha / (k + 1))
    return FormalSeries(acc.coeffs, order)


def delta_psi(inst: PsiInstance, s: FormalSeries) -> FormalSeries:
    """(exp_psi(dpsi) - id) s; finite because dpsi is nilpotent on polynomials."""
    acc = FormalSeries({}, s.order, s.truncated)
    term = s
    k = 0
    while True:
        term = dpsi(inst, term)
        k += 1
        if term.is_zero():
            return acc
        acc = acc + term * (1 / psi_factorial(inst, k))


def int_psi(inst: PsiInstance, s: FormalSeries) -> FormalSeries:
    return _map_monomials(s, lambda n: (n + 1, 1 / inst.bracket(n + 1)))


def definite_int_psi(inst: PsiInstance, s: FormalSeries, a, b) -> Fraction:
    if s.truncated:
        raise ValueError("definite integral of a truncated series is not exact")
    # room for the degree shift so nothing is dropped
    anti = int_psi(inst, s.with_order(s.order + 1))
    return anti.evaluate(b) - anti.evaluate(a)
