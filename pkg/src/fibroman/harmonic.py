"""
Fib-harmonic logarithms phi_n^(t), t in {0, 1}, n in Z, and the
logarithmic binomial expansion built on them.

    phi_n^(0)(x) = x^n              (n >= 0),   0          (n < 0)
    phi_n^(1)(x) = x^n (ln x - f_n) (n >= 0),   x^n        (n < 0)

where f_n = 1 + 1/2_F + ... + 1/n_F.  Coefficients stay exact; values are
exact rationals whenever no logarithm is involved and floats otherwise.
"""

import math
from fractions import Fraction
from numbers import Rational

from .psi_arith import (FIBONACCI, PsiInstance, fibonomial, format_rational, psi_factorial,
                        roman_bracket, roman_coefficient)

__all__ = [
    "HarmonicNumbers", "fib_harmonic", "phi_eval", "LogElement", "dF_on_L",
    "dF_inv_on_L", "shift_coefficients", "generalized_shift",
    "log_binomial_rhs", "shifted_value", "log_binomial_residual",
    "residual_study", "binomiality_check", "inverse_pair_exceptions",
    "DEFAULT_K", "REFERENCE_K",
]

DEFAULT_K = 40
REFERENCE_K = 200


class HarmonicNumbers:
    """Memoized f_0 = 0, f_n = f_(n-1) + 1/n_psi."""

    def __init__(self, inst: PsiInstance = FIBONACCI):
        self.inst = inst
        self._values = [Fraction(0)]

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("harmonic number index must be >= 0, got %d" % n)
        values = self._values
        # concurrent fills append identical values; the length check keeps them in place
        while len(values) <= n:
            m = len(values)
            nxt = values[m - 1] + 1 / self.inst.bracket(m)
            if len(values) == m:
                values.append(nxt)
        return values[n]


_harmonic_tables = {}


def _table(inst):
    table = _harmonic_tables.get(inst)
    if table is None:
        table = _harmonic_tables.setdefault(inst, HarmonicNumbers(inst))
    return table


def fib_harmonic(n: int, inst: PsiInstance = FIBONACCI) -> Fraction:
    return _table(inst)[n]


def _is_exact(x):
    return isinstance(x, Rational)


def phi_eval(t: int, n: int, x, inst: PsiInstance = FIBONACCI):
    if t not in (0, 1):
        raise ValueError("t must be 0 or 1")
    if x <= 0:
        raise ValueError("harmonic logarithms need x > 0, got %s" % x)
    if _is_exact(x):
        x = Fraction(x)
    if t == 0:
        return x**n if n >= 0 else Fraction(0)
    if n < 0:
        return x**n
    return float(x) ** n * (math.log(x) - float(fib_harmonic(n, inst)))


class LogElement:
    """Finite combination of basis symbols phi_n^(t).

    Terms are kept formally, including the symbols phi_n^(0), n < 0, that
    evaluate to the zero function; ``canonical()`` drops them.  ``==`` is
    formal equality of the term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for (t, n), c in (terms or {}).items():
            if t not in (0, 1):
                raise ValueError("t must be 0 or 1")
            if c != 0:
                clean[(t, int(n))] = c
        self._terms = clean

    @classmethod
    def basis(cls, t, n, coeff=1):
        return cls({(t, n): Fraction(coeff)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def canonical(self):
        return LogElement({(t, n): c for (t, n), c in self._terms.items()
                           if not (t == 0 and n < 0)})

    def __add__(self, other):
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return LogElement(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, scalar):
        return LogElement({key: c * scalar for key, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LogElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def evaluate(self, x, inst: PsiInstance = FIBONACCI):
        total = 0
        for (t, n), c in self._terms.items():
            total += c * phi_eval(t, n, x, inst)
        return total

    def to_json(self):
        return [{"t": t, "n": n,
                 "coefficient": format_rational(c) if _is_exact(c) else float(c)}
                for (t, n), c in self.items()]

    def __repr__(self):
        if not self._terms:
            return "LogElement(0)"
        return "LogElement(%s)" % " + ".join(
            "%s*phi[%d,%d]" % (format_rational(c) if _is_exact(c) else repr(c), n, t)
            for (t, n), c in self.items())


def dF_on_L(e: LogElement, inst: PsiInstance = FIBONACCI) -> LogElement:
    """phi_n^(t) -> [n_psi] phi_(n-1)^(t)."""
    out = LogElement()
    for (t, n), c in e.items():
        out = out + LogElement.basis(t, n - 1) * (c * roman_bracket(inst, n))
    return out


def dF_inv_on_L(e: LogElement, inst: PsiInstance = FIBONACCI) -> LogElement:
    """phi_n^(t) -> phi_(n+1)^(t) / [(n+1)_psi], except phi_(-1)^(0) -> 0."""
    out = LogElement()
    for (t, n), c in e.items():
        if t == 0 and n == -1:
            continue
        out = out + LogElement.basis(t, n + 1) * (c / roman_bracket(inst, n + 1))
    return out


def inverse_pair_exceptions(lo=-10, hi=10, inst: PsiInstance = FIBONACCI):
    """Basis points where the two compositions of dF and its inverse fail.

    Returns (left, right): left lists (t, n) with dF_inv(dF(phi)) != phi,
    right lists (t, n) with dF(dF_inv(phi)) != phi.
    """
    left, right = [], []
    for t in (0, 1):
        for n in range(lo, hi + 1):
            phi = LogElement.basis(t, n)
            if dF_inv_on_L(dF_on_L(phi, inst), inst) != phi:
                left.append((t, n))
            if dF_on_L(dF_inv_on_L(phi, inst), inst) != phi:
                right.append((t, n))
    return left, right


def shift_coefficients(t: int, n: int, K: int, inst: PsiInstance = FIBONACCI):
    """c_k with exp_psi(a dpsi) phi_n^(t) = sum_k c_k a^k phi_(n-k)^(t), k <= K.

    c_k = [n][n-1]...[n-k+1] / k_psi!, which is the Roman coefficient [n k].
    Stops at k = n when t = 0 and n >= 0 (later terms are zero functions).
    """
    if K < 0:
        raise ValueError("need K >= 0")
    if t == 0 and n < 0:
        return {}
    top = min(K, n) if t == 0 else K
    coeffs = {}
    falling = Fraction(1)
    for k in range(top + 1):
        if k:
            falling *= roman_bracket(inst, n - k + 1)
        coeffs[k] = falling / psi_factorial(inst, k)
    return coeffs


def generalized_shift(t: int, n: int, a, K: int = DEFAULT_K,
                      inst: PsiInstance = FIBONACCI) -> LogElement:
    """Truncated exp_psi(a dpsi) applied to phi_n^(t), as a LogElement in x."""
    if _is_exact(a):
        a = Fraction(a)
    terms = {(t, n - k): c * a**k for k, c in shift_coefficients(t, n, K, inst).items()}
    return LogElement(terms).canonical()


def log_binomial_rhs(t: int, n: int, a, x, K: int = DEFAULT_K,
                     inst: PsiInstance = FIBONACCI):
    """sum_{k<=K} [n k] phi_(n-k)^(t)(a) x^k."""
    if _is_exact(x):
        x = Fraction(x)
    total = 0
    for k in range(K + 1):
        total += roman_coefficient(inst, n, k) * phi_eval(t, n - k, a, inst) * x**k
    return total


def shifted_value(t: int, n: int, a, x, K: int = REFERENCE_K,
                  inst: PsiInstance = FIBONACCI):
    """phi_n^(t)(x +_psi a), expanded about a: the shift of size x applied
    to phi_n^(t) and evaluated at a, truncated at K."""
    return generalized_shift(t, n, x, K, inst).evaluate(a, inst)


def log_binomial_residual(t: int, n: int, a, x, K: int = DEFAULT_K,
                          reference_K: int = REFERENCE_K,
                          inst: PsiInstance = FIBONACCI) -> float:
    """|shifted value at reference_K terms - right-hand side at K terms|."""
    lhs = shifted_value(t, n, a, x, max(K, reference_K), inst)
    rhs = log_binomial_rhs(t, n, a, x, K, inst)
    return float(abs(lhs - rhs))


def residual_study(t, n, a, x, Ks=(10, 20, 30, 40), reference_K=REFERENCE_K,
                   inst: PsiInstance = FIBONACCI):
    return [(K, log_binomial_residual(t, n, a, x, K, reference_K, inst)) for K in Ks]


def binomiality_check(n: int, inst: PsiInstance = FIBONACCI):
    """Exact check that the polynomial shift of x^n has the psi-binomial row.

    Returns (holds, row) where row[k] is the coefficient of a^k x^(n-k).
    """
    if n < 0:
        raise ValueError("polynomial case needs n >= 0")
    row = [shift_coefficients(0, n, n, inst)[k] for k in range(n + 1)]
    if inst is FIBONACCI:
        expected = [Fraction(fibonomial(n, k)) for k in range(n + 1)]
    else:
        expected = [psi_factorial(inst, n) / (psi_factorial(inst, k) * psi_factorial(inst, n - k))
                    for k in range(n + 1)]
    return row == expected, row
