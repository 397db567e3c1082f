"""Exact arithmetic underlying every computation in chiclass: rational
numbers (sympy Rational), polynomials in the parameter y (sympy Poly
over QQ), the NormCoeff type num/(1+y)**k whose denominators record the
td_(1+y) normalization, truncated power series, and elements of
truncated graded rings.

Nothing in chiclass is computed in floating point.
"""

from .coefficients import (Y, ONE_PLUS_Y, ZERO_POLY, ONE_POLY, ypoly, parse_ypoly, format_ypoly,
                           evaluate_ypoly, euler_characteristic, arithmetic_genus,
                           signature, NormCoeff, NotPolynomial, clear_denominator)
from .series import PowerSeries, series_exp, series_log, series_exp_log
from .graded import GradedClass
