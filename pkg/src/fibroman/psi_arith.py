"""
Exact arithmetic for psi-sequences: factorials, Roman factorials and
Roman (hybrid) coefficients on all of Z.

A psi-sequence is a map n -> n_psi of nonzero brackets for n >= 1.  The
Fibonacci instance (n_F = F_n) is the headline case; ``classic`` (n_psi = n)
recovers the ordinary Roman coefficients and ``q_gauss(q)`` the Gaussian
brackets [n]_q.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

__all__ = [
    "PsiInstance", "SweepReport", "FIBONACCI", "CLASSIC", "q_gauss",
    "get_instance", "fibonacci", "psi_factorial", "roman_bracket",
    "roman_factorial", "roman_coefficient", "fibonomial",
    "falling_factorial", "case_formula", "pascal_residual",
    "identity_sweep", "IDENTITIES", "format_rational", "parse_rational",
]


def format_rational(r) -> str:
    """Canonical text form: "p/q" in lowest terms, or "p" when q == 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("malformed rational %r" % text) from exc


_fib_cache = [0, 1]


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError("fibonacci index must be >= 1, got %d" % n)
    # list appends are atomic; a racing thread only recomputes the same values
    while len(_fib_cache) <= n:
        _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[n]


@dataclass(frozen=True, eq=False)
class PsiInstance:
    """A named bracket sequence n -> n_psi (n >= 1), memoized."""

    name: str
    rule: Callable[[int], Fraction]
    _cache: dict = field(default_factory=dict, repr=False)

    def bracket(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("bracket defined for n >= 1, got %d" % n)
        try:
            return self._cache[n]
        except KeyError:
            pass
        value = Fraction(self.rule(n))
        if value == 0:
            raise ValueError("%s bracket vanishes at n=%d" % (self.name, n))
        return self._cache.setdefault(n, value)

    def __repr__(self):
        return "PsiInstance(%s)" % self.name


FIBONACCI = PsiInstance("fibonacci", fibonacci)
CLASSIC = PsiInstance("classic", lambda n: n)


def q_gauss(q) -> PsiInstance:
    """Gaussian brackets [n]_q = (1 - q^n)/(1 - q)."""
    q = Fraction(q)
    if q in (0, 1, -1):
        # q = -1 kills [2]_q
        raise ValueError("q-gauss needs q not in {0, 1, -1}, got %s" % q)
    return PsiInstance("q-gauss(%s)" % format_rational(q),
                       lambda n: (1 - q**n) / (1 - q))


def get_instance(name: str, q: Optional[Fraction] = None) -> PsiInstance:
    if name == "fibonacci":
        return FIBONACCI
    if name == "classic":
        return CLASSIC
    if name in ("q-gauss", "qgauss"):
        if q is None:
            raise ValueError("q-gauss instance needs a q value")
        return q_gauss(q)
    raise ValueError("unknown instance %r" % name)


def psi_factorial(inst: PsiInstance, n: int) -> Fraction:
    if n < 0:
        raise ValueError("psi_factorial needs n >= 0; use roman_factorial")
    p = Fraction(1)
    for j in range(1, n + 1):
        p *= inst.bracket(j)
    return p


def roman_bracket(inst: PsiInstance, n: int) -> Fraction:
    """[n_psi]: the bracket for n > 0, 1 at zero, -(-n)_psi for n < 0.

    The negative branch is the only choice compatible with
    [n]! = [n] [n-1]! across all integers.
    """
    if n > 0:
        return inst.bracket(n)
    if n == 0:
        return Fraction(1)
    return -inst.bracket(-n)


def roman_factorial(inst: PsiInstance, n: int) -> Fraction:
    if n >= 0:
        return psi_factorial(inst, n)
    sign = 1 if (n + 1) % 2 == 0 else -1
    return sign / psi_factorial(inst, -n - 1)


def roman_coefficient(inst: PsiInstance, n: int, k: int) -> Fraction:
    return roman_factorial(inst, n) / (roman_factorial(inst, k) * roman_factorial(inst, n - k))


def fibonomial(n: int, k: int) -> int:
    if n < 0 or not 0 <= k <= n:
        raise ValueError("fibonomial needs 0 <= k <= n, got n=%d k=%d" % (n, k))
    value = psi_factorial(FIBONACCI, n) / (psi_factorial(FIBONACCI, k) * psi_factorial(FIBONACCI, n - k))
    assert value.denominator == 1, "fibonomial (%d, %d) not integral" % (n, k)
    return value.numerator


def falling_factorial(inst: PsiInstance, n: int, k: int) -> Fraction:
    """n_psi (n-1)_psi ... (n-k+1)_psi, using Roman brackets below 1."""
    if k < 0:
        raise ValueError("falling factorial length must be >= 0")
    p = Fraction(1)
    for j in range(k):
        p *= roman_bracket(inst, n - j)
    return p


def _psi_binomial(inst, n, k):
    return psi_factorial(inst, n) / (psi_factorial(inst, k) * psi_factorial(inst, n - k))


def case_formula(inst: PsiInstance, n: int, k: int) -> Optional[Fraction]:
    """Closed-form Roman coefficient on the three sign regions that have one.

    Returns None outside them (k > n >= 0, and the remaining sign patterns).
    """
    if n >= 0 and 0 <= k <= n:
        return _psi_binomial(inst, n, k)
    if k >= 0 > n:
        return (-1) ** k * _psi_binomial(inst, -n - 1 + k, k)
    if 0 > n >= k:
        return (-1) ** ((k + n) % 2) * _psi_binomial(inst, -k - 1, n - k)
    return None


def pascal_residual(inst: PsiInstance, n: int, k: int) -> Fraction:
    return (roman_coefficient(inst, n, k)
            - roman_coefficient(inst, n - 1, k - 1)
            - roman_coefficient(inst, n - 1, k))


@dataclass
class SweepReport:
    window: tuple
    identity: str
    instance: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "identity": self.identity,
            "window": list(self.window),
            "checked": self.checked,
            "violations": [
                {"point": list(point), "lhs": format_rational(lhs), "rhs": format_rational(rhs)}
                for point, lhs, rhs in self.violations
            ],
        }


def _sym(inst, rng):
    for n in rng:
        for k in rng:
            yield (n, k), roman_coefficient(inst, n, k), roman_coefficient(inst, n, n - k)


def _pascal(inst, rng):
    for n in rng:
        for k in rng:
            yield ((n, k), roman_coefficient(inst, n, k),
                   roman_coefficient(inst, n - 1, k - 1) + roman_coefficient(inst, n - 1, k))


def _product(inst, rng):
    # as printed: [n j][j k] = [n k][n-j j-k]
    for n in rng:
        for j in rng:
            for k in rng:
                yield ((n, k, j),
                       roman_coefficient(inst, n, j) * roman_coefficient(inst, j, k),
                       roman_coefficient(inst, n, k) * roman_coefficient(inst, n - j, j - k))


def _product_trinomial(inst, rng):
    # trinomial revision form: [n j][j k] = [n k][n-k j-k]
    for n in rng:
        for j in rng:
            for k in rng:
                yield ((n, k, j),
                       roman_coefficient(inst, n, j) * roman_coefficient(inst, j, k),
                       roman_coefficient(inst, n, k) * roman_coefficient(inst, n - k, j - k))


def _cases(inst, rng):
    for n in rng:
        for k in rng:
            closed = case_formula(inst, n, k)
            if closed is not None:
                yield (n, k), closed, roman_coefficient(inst, n, k)


IDENTITIES = {
    "symmetry": _sym,
    "pascal": _pascal,
    "product": _product,
    "product-trinomial": _product_trinomial,
    "case-formula": _cases,
}


def identity_sweep(inst: PsiInstance, window, identity: str) -> SweepReport:
    """Evaluate an identity on every grid point of ``window`` (inclusive
    bounds) and collect each point where the two sides differ."""
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window [%d, %d]" % (lo, hi))
    try:
        gen = IDENTITIES[identity]
    except KeyError:
        raise ValueError("unknown identity %r (choose from %s)"
                         % (identity, ", ".join(IDENTITIES))) from None
    report = SweepReport((lo, hi), identity, inst.name)
    for point, lhs, rhs in gen(inst, range(lo, hi + 1)):
        report.checked += 1
        if lhs != rhs:
            report.violations.append((point, lhs, rhs))
    return report
