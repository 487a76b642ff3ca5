from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from fibroman.psi_arith import (CLASSIC, FIBONACCI, case_formula, falling_factorial,
                                fibonacci, fibonomial, format_rational, get_instance,
                                identity_sweep, parse_rational, pascal_residual,
                                psi_factorial, q_gauss, roman_bracket, roman_coefficient,
                                roman_factorial)

INSTANCES = [FIBONACCI, CLASSIC, q_gauss(Fraction(1, 2)), q_gauss(3)]


def fib_oracle(n):
    # plain iteration, independent of the module cache
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def classic_roman_oracle(n, k):
    """Roman coefficient from the classic Roman factorial, integers only."""
    def rf(m):
        if m >= 0:
            return Fraction(factorial(m))
        return Fraction((-1) ** ((m + 1) % 2), factorial(-m - 1))
    return rf(n) / (rf(k) * rf(n - k))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (6, 8), (10, 55), (50, 12586269025)])
def test_fibonacci(n, expected):
    assert fibonacci(n) == expected


def test_fibonacci_domain():
    with pytest.raises(ValueError):
        fibonacci(0)


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 6), (6, 240)])
def test_psi_factorial_fib(n, expected):
    assert psi_factorial(FIBONACCI, n) == expected


def test_psi_factorial_rejects_negative():
    with pytest.raises(ValueError):
        psi_factorial(FIBONACCI, -1)


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 5), (-3, -2), (-1, -1)])
def test_roman_bracket(n, expected):
    assert roman_bracket(FIBONACCI, n) == expected


@pytest.mark.parametrize("n, expected", [(3, 2), (-1, 1), (-4, Fraction(-1, 2)), (-2, -1)])
def test_roman_factorial(n, expected):
    assert roman_factorial(FIBONACCI, n) == expected


@pytest.mark.parametrize("n, k, expected", [(5, 2, 15), (0, 3, Fraction(1, 2)), (-2, 2, 2)])
def test_roman_coefficient(n, k, expected):
    assert roman_coefficient(FIBONACCI, n, k) == expected


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: i.name)
def test_factorial_recurrence(inst):
    for n in range(-20, 21):
        assert roman_factorial(inst, n) == roman_bracket(inst, n) * roman_factorial(inst, n - 1)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (6, 3, 60), (7, 0, 1), (7, 7, 1)])
def test_fibonomial_values(n, k, expected):
    assert fibonomial(n, k) == expected


def test_fibonomial_domain():
    with pytest.raises(ValueError):
        fibonomial(3, 4)
    with pytest.raises(ValueError):
        fibonomial(3, -1)


def test_fibonomial_integral_and_matches_product_oracle():
    for n in range(41):
        fact = [1]
        for j in range(1, n + 1):
            fact.append(fact[-1] * fib_oracle(j))
        for k in range(n + 1):
            num, den = fact[n], fact[k] * fact[n - k]
            assert num % den == 0
            assert fibonomial(n, k) == num // den
            assert roman_coefficient(FIBONACCI, n, k) == num // den


@pytest.mark.parametrize("n, k, expected", [(6, 3, 120), (9, 0, 1), (5, 2, 15)])
def test_falling_factorial(n, k, expected):
    assert falling_factorial(FIBONACCI, n, k) == expected


def test_classic_matches_binomial_and_oracle():
    for n in range(13):
        for k in range(n + 1):
            assert roman_coefficient(CLASSIC, n, k) == comb(n, k)
    for n in range(-12, 13):
        for k in range(-12, 13):
            assert roman_coefficient(CLASSIC, n, k) == classic_roman_oracle(n, k)


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: i.name)
def test_special_row(inst):
    for k in range(1, 13):
        value = Fraction((-1) ** (k + 1)) / inst.bracket(k)
        assert roman_coefficient(inst, 0, k) == value
        assert roman_coefficient(inst, 0, -k) == value


@pytest.mark.parametrize("n, k, expected", [(-1, 2, 1), (-2, 1, -1), (2, 5, None), (3, -1, None)])
def test_case_formula(n, k, expected):
    assert case_formula(FIBONACCI, n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(1, 0, -1), (-1, 2, 0), (4, 2, 2), (3, 1, 0), (5, 2, 6)])
def test_pascal_residual_fib(n, k, expected):
    # recurrence fails even in the nonnegative quadrant: 6 - (2 + 2) = 2 at (4, 2)
    assert pascal_residual(FIBONACCI, n, k) == expected


def test_pascal_residual_classic_boundary():
    assert pascal_residual(CLASSIC, 1, 0) == -1
    assert pascal_residual(CLASSIC, 0, 1) != 0
    assert pascal_residual(CLASSIC, 0, 0) != 0
    assert pascal_residual(CLASSIC, 5, 2) == 0


def test_sweep_symmetry_fib():
    report = identity_sweep(FIBONACCI, (-10, 10), "symmetry")
    assert report.ok and report.checked == 21 * 21


def test_sweep_pascal_classic_small():
    report = identity_sweep(CLASSIC, (-6, 6), "pascal")
    assert report.violations
    for (n, k), _, _ in report.violations:
        assert n == 0 or k == 0 or k == n


def test_sweep_case_formula_nonneg():
    assert identity_sweep(FIBONACCI, (0, 8), "case-formula").ok


def test_sweep_product_printed_vs_trinomial():
    # the trinomial-revision form holds on the nonnegative region; the printed
    # [n-j, j-k] form does not even for classic binomials
    assert identity_sweep(CLASSIC, (0, 6), "product-trinomial").ok
    assert identity_sweep(FIBONACCI, (0, 6), "product-trinomial").ok
    assert not identity_sweep(CLASSIC, (0, 6), "product").ok


def test_sweep_errors():
    with pytest.raises(ValueError):
        identity_sweep(FIBONACCI, (3, 1), "symmetry")
    with pytest.raises(ValueError):
        identity_sweep(FIBONACCI, (0, 1), "nope")


def test_sweep_report_json():
    data = identity_sweep(CLASSIC, (0, 1), "pascal").to_json()
    assert data["identity"] == "pascal"
    assert all(isinstance(v["lhs"], str) for v in data["violations"])


def test_instances_and_rationals():
    assert get_instance("fibonacci") is FIBONACCI
    assert get_instance("q-gauss", Fraction(1, 2)).bracket(3) == Fraction(7, 4)
    with pytest.raises(ValueError):
        get_instance("q-gauss")
    with pytest.raises(ValueError):
        q_gauss(1)
    with pytest.raises(ValueError):
        q_gauss(-1)
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("abc")


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_symmetry_property(n, k):
    for inst in (FIBONACCI, CLASSIC):
        assert roman_coefficient(inst, n, k) == roman_coefficient(inst, n, n - k)


@given(st.fractions(min_value=-1000, max_value=1000))
def test_rational_text_roundtrip(r):
    assert parse_rational(format_rational(r)) == r
