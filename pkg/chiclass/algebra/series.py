"""
Truncated one-variable power series with NormCoeff coefficients.
"""

from sympy import Rational

from chiclass.algebra.coefficients import NormCoeff


class PowerSeries(object):
    """
    a power series c_0 + c_1 a + ... + c_N a^N known up to order N.
    The coefficients are NormCoeff objects; the series is immutable.
    """

    def __init__(self, coeffs, order=None):
        """
        coeffs is an iterable of coefficients (anything NormCoeff can
        coerce), index j holding the coefficient of a^j.  If order is
        given, the list is truncated or zero-padded to order+1 terms.
        """
        coeffs = [NormCoeff.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative, got {}".format(order))
        coeffs = coeffs[:order+1]
        coeffs += [NormCoeff(0)] * (order + 1 - len(coeffs))
        self._coeffs = tuple(coeffs)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return list(self._coeffs)

    def __getitem__(self, j):
        if j > self.order:
            raise IndexError("coefficient {} beyond series order {}".format(j, self.order))
        return self._coeffs[j]

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coeffs)

    def truncate(self, order):
        return PowerSeries(self._coeffs, order=min(order, self.order))

    def is_zero(self):
        return all(c.is_zero() for c in self._coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self[j] + other[j] for j in range(n+1)])

    def __neg__(self):
        return PowerSeries([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """ multiply every coefficient by the scalar c """
        c = NormCoeff.coerce(c)
        return PowerSeries([c * a for a in self._coeffs])

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        out = []
        for m in range(n+1):
            s = NormCoeff(0)
            for k in range(m+1):
                s = s + self[k] * other[m-k]
            out.append(s)
        return PowerSeries(out)

    def rescale(self, c):
        """ return the series in the variable c*a, i.e. coefficient j times c**j """
        c = NormCoeff.coerce(c)
        out = []
        cj = NormCoeff(1)
        for a in self._coeffs:
            out.append(a * cj)
            cj = cj * c
        return PowerSeries(out)

    def reciprocal(self):
        """ 1/s, which requires a unit constant term """
        r0 = self[0].inverse()
        r = [r0]
        for m in range(1, self.order+1):
            s = NormCoeff(0)
            for k in range(1, m+1):
                s = s + self[k] * r[m-k]
            r.append(-(r0 * s))
        return PowerSeries(r)

    def shift_down(self):
        """ divide by a, which requires a zero constant term """
        if not self[0].is_zero():
            raise ValueError("cannot divide a series with nonzero constant term by a")
        return PowerSeries(self._coeffs[1:])

    def specialize(self, y0):
        """ substitute y = y0 into every coefficient (each must be a polynomial) """
        return PowerSeries([c.evaluate(y0) for c in self._coeffs])

    def evaluate(self, x):
        """
        evaluate the series at x, which must support + and * with
        NormCoeff scalars and be nilpotent of index at most order+1
        (e.g. a GradedClass without degree-zero part).  Horner's rule.
        """
        if not x.constant().is_zero():
            raise ValueError("series can only be evaluated at a nilpotent class")
        coeffs = self._coeffs[:x.ring.dim+1]
        result = x.ring.one() * coeffs[-1]
        for c in reversed(coeffs[:-1]):
            result = result * x + x.ring.one() * c
        return result

    def __repr__(self):
        return "PowerSeries({})".format(", ".join(str(c) for c in self._coeffs))

    def __str__(self):
        terms = []
        for j, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            if j == 0:
                terms.append("({})".format(c))
            elif j == 1:
                terms.append("({})*a".format(c))
            else:
                terms.append("({})*a^{}".format(c, j))
        return " + ".join(terms) + " + O(a^{})".format(self.order+1) if terms else \
            "O(a^{})".format(self.order+1)


def series_exp(s, order=None):
    """
    exp(s) truncated at the given order.  s must have zero constant
    term; coefficients of s beyond its own order are taken to be zero.
    Uses e_m = (1/m) sum_{k=1}^m k s_k e_{m-k}.
    """
    if order is None:
        order = s.order
    if not s[0].is_zero():
        raise ValueError("exp needs a series with zero constant term, got {}".format(s[0]))
    if order > s.order:
        s = PowerSeries(s.coeffs, order=order)

    e = [NormCoeff(1)]
    for m in range(1, order+1):
        acc = NormCoeff(0)
        for k in range(1, m+1):
            acc = acc + s[k] * e[m-k] * k
        e.append(acc * Rational(1, m))
    return PowerSeries(e)


def series_log(s, order=None):
    """
    log(s) truncated at the given order.  s must have constant term 1;
    coefficients of s beyond its own order are taken to be zero.
    Uses l_m = s_m - (1/m) sum_{k=1}^{m-1} k l_k s_{m-k}.
    """
    if order is None:
        order = s.order
    if s[0] != NormCoeff(1):
        raise ValueError("log needs a series with constant term 1, got {}".format(s[0]))
    if order > s.order:
        s = PowerSeries(s.coeffs, order=order)

    l = [NormCoeff(0)]
    for m in range(1, order+1):
        acc = NormCoeff(0)
        for k in range(1, m):
            acc = acc + l[k] * s[m-k] * k
        l.append(s[m] - acc * Rational(1, m))
    return PowerSeries(l)


def series_exp_log(s, order=None, which="exp"):
    """ exp(s) or log(s), selected by which ("exp" or "log") """
    if which == "exp":
        return series_exp(s, order)
    if which == "log":
        return series_log(s, order)
    raise ValueError("which must be 'exp' or 'log', got {!r}".format(which))
