"""Exact Fibonacci-Roman logarithmic binomial calculus."""

from .psi_arith import (CLASSIC, FIBONACCI, PsiInstance, SweepReport, case_formula,
                        falling_factorial, fibonacci, fibonomial, get_instance,
                        identity_sweep, pascal_residual, psi_factorial, q_gauss,
                        roman_bracket, roman_coefficient, roman_factorial)
from .fcalc import FormalSeries
from .harmonic import LogElement
from .jackson_q import QParam

__version__ = "0.1.0"
