"""
Exact coefficients: polynomials in the parameter y over the rationals
and the (1+y)-denominator bookkeeping used by the td_(1+y) normalization.

A polynomial in y is a sympy Poly over QQ.  A NormCoeff is a pair
(num, k) standing for num / (1+y)**k, kept in the canonical form where
either k = 0 or (1+y) does not divide num.
"""

import tokenize

import sympy
from sympy import QQ, Poly, Rational
from sympy.parsing.sympy_parser import (parse_expr, standard_transformations,
                                        implicit_multiplication_application,
                                        convert_xor)

Y = sympy.Symbol("y")

_TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application,
                                               convert_xor)


def ypoly(expr=0):
    """ return expr (a number, sympy expression or Poly) as a Poly in y over QQ """
    if isinstance(expr, Poly):
        if expr.gens != (Y,):
            raise ValueError("expected a polynomial in y, got {}".format(expr))
        return expr.set_domain(QQ)
    return Poly(expr, Y, domain=QQ)


ONE_PLUS_Y = ypoly(1 + Y)
ZERO_POLY = ypoly(0)
ONE_POLY = ypoly(1)


def parse_ypoly(text):
    """
    parse a polynomial written in the report grammar, e.g.
    "1 - 7y + y^2" or "(1/2)y - 3", into a Poly.  Floating point
    literals are rejected.
    """
    if not isinstance(text, str):
        raise ValueError("polynomial must be given as a string, got {!r}".format(text))
    try:
        expr = parse_expr(text, local_dict={"y": Y},
                          transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, tokenize.TokenError,
            sympy.SympifyError) as err:
        raise ValueError("cannot parse polynomial {!r}: {}".format(text, err))

    expr = sympy.sympify(expr)
    if expr.atoms(sympy.Float):
        raise ValueError("floating point coefficient in {!r}".format(text))
    if not expr.free_symbols <= {Y}:
        raise ValueError("unexpected symbols {} in {!r}".format(
            sorted(str(s) for s in expr.free_symbols - {Y}), text))
    try:
        return ypoly(sympy.expand(expr))
    except sympy.PolynomialError:
        raise ValueError("{!r} is not a polynomial in y".format(text))


def format_ypoly(p):
    """
    return the polynomial p in ascending powers of y with explicit
    signs, e.g. "2 - 20y + 2y^2".  Fractional coefficients of y-powers
    are parenthesized: "(1/2)y".
    """
    p = ypoly(p)
    if p.is_zero:
        return "0"

    out = ""
    for k in range(p.degree() + 1):
        c = Rational(p.nth(k))
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = "{}".format(mag)
        else:
            mono = "y" if k == 1 else "y^{}".format(k)
            if mag == 1:
                body = mono
            elif mag.q == 1:
                body = "{}{}".format(mag, mono)
            else:
                body = "({}){}".format(mag, mono)

        if not out:
            out = "-" + body if c < 0 else body
        else:
            out += " - " + body if c < 0 else " + " + body
    return out


def evaluate_ypoly(p, y0):
    """ substitute the number y0 for y, returning a sympy Rational """
    return Rational(ypoly(p).eval(y0))


def euler_characteristic(p):
    """ the y = -1 value of a chi_y polynomial """
    return evaluate_ypoly(p, -1)


def arithmetic_genus(p):
    """ the y = 0 value of a chi_y polynomial """
    return evaluate_ypoly(p, 0)


def signature(p):
    """ the y = 1 value of a chi_y polynomial """
    return evaluate_ypoly(p, 1)


class NotPolynomial(ArithmeticError):
    """
    raised when a NormCoeff that must be a polynomial still carries a
    (1+y) denominator.  This always signals a computation that broke a
    polynomiality guarantee, so it is never caught silently.
    """

    def __init__(self, coeff):
        self.coeff = coeff
        super(NotPolynomial, self).__init__(
            "coefficient {} is not a polynomial in y".format(coeff))


class NormCoeff(object):
    """
    an element num / (1+y)**k of Q[y, 1/(1+y)] in canonical form.
    Instances are immutable.
    """

    __slots__ = ("_num", "_k")

    def __init__(self, num=0, k=0):
        if k < 0:
            num = ypoly(num) * ONE_PLUS_Y**(-k)
            k = 0
        num = ypoly(num)

        # strip common (1+y) factors
        while k > 0 and not num.is_zero:
            q, r = num.div(ONE_PLUS_Y)
            if not r.is_zero:
                break
            num = q
            k -= 1
        if num.is_zero:
            k = 0

        self._num = num
        self._k = k

    @classmethod
    def coerce(cls, value):
        """ return value (NormCoeff, Poly, int or Rational) as a NormCoeff """
        if isinstance(value, NormCoeff):
            return value
        return cls(value, 0)

    @property
    def num(self):
        return self._num

    @property
    def denom_power(self):
        return self._k

    def is_zero(self):
        return self._num.is_zero

    def is_polynomial(self):
        return self._k == 0

    def is_constant(self):
        """ True if this is a rational number """
        return self._k == 0 and self._num.degree() <= 0

    def __eq__(self, other):
        if not isinstance(other, (NormCoeff, Poly, int, Rational)):
            return NotImplemented
        other = NormCoeff.coerce(other)
        return self._k == other._k and self._num == other._num

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((tuple(self._num.all_coeffs()), self._k))

    def __add__(self, other):
        other = NormCoeff.coerce(other)
        k = max(self._k, other._k)
        num = (self._num * ONE_PLUS_Y**(k - self._k) +
               other._num * ONE_PLUS_Y**(k - other._k))
        return NormCoeff(num, k)

    __radd__ = __add__

    def __neg__(self):
        return NormCoeff(-self._num, self._k)

    def __sub__(self, other):
        return self + (-NormCoeff.coerce(other))

    def __rsub__(self, other):
        return NormCoeff.coerce(other) - self

    def __mul__(self, other):
        other = NormCoeff.coerce(other)
        return NormCoeff(self._num * other._num, self._k + other._k)

    __rmul__ = __mul__

    def unit_factorization(self):
        """
        write this coefficient as q * (1+y)**j with q a nonzero rational
        and j an integer.  Raise ValueError if it is not a unit of
        Q[y, 1/(1+y)].
        """
        if self.is_zero():
            raise ValueError("zero is not a unit")
        num = self._num
        j = 0
        while num.degree() > 0:
            q, r = num.div(ONE_PLUS_Y)
            if not r.is_zero:
                raise ValueError("{} is not a unit".format(self))
            num = q
            j += 1
        return Rational(num.nth(0)), j - self._k

    def inverse(self):
        q, j = self.unit_factorization()
        return NormCoeff(ypoly(1 / q), j)

    def __truediv__(self, other):
        return self * NormCoeff.coerce(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse()**(-n)
        return NormCoeff(self._num**n, self._k * n)

    def evaluate(self, y0):
        """ value at y = y0; only defined once the coefficient is a polynomial """
        return evaluate_ypoly(clear_denominator(self), y0)

    def __repr__(self):
        return "NormCoeff({!r}, {})".format(format_ypoly(self._num), self._k)

    def __str__(self):
        if self._k == 0:
            return format_ypoly(self._num)
        if self._k == 1:
            return "({})/(1 + y)".format(format_ypoly(self._num))
        return "({})/(1 + y)^{}".format(format_ypoly(self._num), self._k)


def clear_denominator(c):
    """
    certify that the NormCoeff c is a polynomial in y and return it
    as a Poly; raise NotPolynomial otherwise
    """
    c = NormCoeff.coerce(c)
    if not c.is_polynomial():
        raise NotPolynomial(c)
    return c.num
