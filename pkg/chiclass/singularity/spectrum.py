"""
Steenbrink spectra of weighted homogeneous isolated hypersurface
singularities, and the chi_y polynomial of the reduced cohomology of
their Milnor fibers.
"""

import logging
from collections import Counter
from fractions import Fraction

import sympy
from sympy import QQ, Poly, Rational, floor, ilcm

from chiclass.algebra import Y, ypoly

logger = logging.getLogger(__name__)


def as_rational(x):
    """ x (int, Fraction, sympy Rational or "p/q" string) as a sympy Rational; floats are rejected """
    if isinstance(x, float) or isinstance(x, sympy.Float):
        raise TypeError("floating point value {} where an exact rational is needed".format(x))
    if isinstance(x, bool):
        raise TypeError("boolean {} is not a rational number".format(x))
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    if isinstance(x, str):
        if "." in x or "e" in x.lower():
            raise ValueError("{!r} is not written as p/q".format(x))
    try:
        r = Rational(x)
    except (TypeError, ValueError, sympy.SympifyError):
        raise ValueError("{!r} is not a rational number".format(x))
    if not r.is_Rational:
        raise ValueError("{!r} is not a rational number".format(x))
    return r


class Weights(object):
    """ the weights w_1, ..., w_n of a weighted homogeneous polynomial, each in (0, 1) """

    def __init__(self, w):
        w = tuple(as_rational(x) for x in w)
        if not w:
            raise ValueError("weights need at least one variable")
        for x in w:
            if not 0 < x < 1:
                raise ValueError("weight {} is outside the open interval (0, 1)".format(x))
        self.w = w

    @property
    def n(self):
        return len(self.w)

    def product_milnor_number(self):
        """ prod (1/w_i - 1), which is the Milnor number for consistent weights """
        mu = Rational(1)
        for x in self.w:
            mu *= 1/x - 1
        return mu

    def __eq__(self, other):
        if not isinstance(other, Weights):
            return NotImplemented
        return self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return "Weights({})".format(", ".join(str(x) for x in self.w))


class SpectrumData(object):
    """
    the spectrum of an isolated singularity in n variables: a multiset
    of rationals in (0, n), symmetric under a -> n - a, of cardinality
    the Milnor number
    """

    def __init__(self, entries, n):
        if not isinstance(n, int) or n < 1:
            raise ValueError("spectrum needs a positive number of variables, got {}".format(n))
        entries = tuple(sorted(as_rational(a) for a in entries))
        for a in entries:
            if not 0 < a < n:
                raise ValueError("spectrum number {} is outside (0, {})".format(a, n))
        counts = Counter(entries)
        for a, m in counts.items():
            if counts.get(n - a, 0) != m:
                raise ValueError("spectrum is not symmetric about {}/2: {} appears {} times, "
                                 "{} appears {} times".format(n, a, m, n - a, counts.get(n - a, 0)))
        self.entries = entries
        self.n = n

    @property
    def mu(self):
        return len(self.entries)

    def shift(self, by, n=None):
        """ the multiset a + by, in n variables (default: one more than now) """
        if n is None:
            n = self.n + 1
        return SpectrumData([a + by for a in self.entries], n)

    def __eq__(self, other):
        if not isinstance(other, SpectrumData):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.n, self.entries))

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "SpectrumData(n={}, [{}])".format(self.n, ", ".join(str(a) for a in self.entries))


def spectrum_wh(w):
    """
    expand prod_i (t^{w_i} - t)/(1 - t^{w_i}) as sum_a m_a t^a and return
    the exponents with multiplicity.  With D the common denominator of
    the weights this is a quotient of polynomials in u = t^{1/D}; the
    division must be exact with non-negative coefficients.
    """
    if not isinstance(w, Weights):
        w = Weights(w)

    D = 1
    for x in w.w:
        D = ilcm(D, x.q)
    u = sympy.Symbol("u")

    num = Poly(1, u, domain=QQ)
    den = Poly(1, u, domain=QQ)
    for x in w.w:
        a = int(x * D)
        num = num * Poly(u**a - u**D, u, domain=QQ)
        den = den * Poly(1 - u**a, u, domain=QQ)

    q, r = num.div(den)
    if not r.is_zero:
        raise ValueError("weights {} do not define an isolated singularity: "
                         "the spectrum product is not a polynomial".format(w))

    entries = []
    for (k,), c in q.terms():
        if c < 0 or c.q != 1:
            raise ValueError("weights {} do not define an isolated singularity: "
                             "coefficient {} at t^{}".format(w, c, Rational(k, D)))
        entries += [Rational(k, D)] * int(c)

    s = SpectrumData(entries, w.n)
    logger.debug("spectrum of %r: %r", w, s)
    return s


def milnor_number(data):
    """
    the Milnor number: the size of a SpectrumData, or for Weights the
    product prod (1/w_i - 1), checked against the spectrum
    """
    if isinstance(data, SpectrumData):
        return data.mu
    if not isinstance(data, Weights):
        data = Weights(data)
    mu = data.product_milnor_number()
    if mu.q != 1:
        raise ValueError("inconsistent weights {}: prod(1/w_i - 1) = {} is not an integer".format(
            data, mu))
    s = spectrum_wh(data)
    assert s.mu == mu
    return int(mu)


def hodge_level(a, n):
    """ the Hodge level floor(n - a) of the spectrum number a """
    return int(floor(n - a))


def chi_y_milnor_fiber(s):
    """
    chi_y of the reduced cohomology of the Milnor fiber, concentrated in
    degree n - 1: (-1)^{n-1} sum_a (-y)^{p(a)} with p(a) = floor(n - a)
    """
    integral = [a for a in s.entries if a.q == 1]
    if integral:
        logger.warning("integral spectrum numbers %s placed at Hodge level n - a",
                       ", ".join(str(a) for a in integral))
    chi = 0
    for a in s.entries:
        chi += (-Y)**hodge_level(a, s.n)
    return ypoly((-1)**(s.n - 1) * chi)
