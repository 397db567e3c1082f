"""
Elements of truncated graded rings Q[y, 1/(1+y)][h_1, ..., h_m] / (h_i^{n_i+1}),
the cohomology rings of products of projective spaces with coefficients
in the parameter y.
"""

import itertools

from chiclass.algebra.coefficients import NormCoeff
from chiclass.algebra.series import PowerSeries, series_exp, series_log


class GradedClass(object):
    """
    an element of the truncated ring described by a ring descriptor
    (see chiclass.geometry.RingDesc).  Parts are stored as a mapping
    from multidegree tuples to nonzero NormCoeff values; monomials above
    the truncation bound are dropped on construction.
    """

    def __init__(self, ring, parts=None):
        self.ring = ring
        self._parts = {}
        if parts:
            for key, c in parts.items():
                key = tuple(key)
                if len(key) != len(ring.factors) or min(key) < 0:
                    raise ValueError("multidegree {} does not fit ring {}".format(key, ring))
                if not ring.truncates(key):
                    continue
                c = NormCoeff.coerce(c)
                if c.is_zero():
                    continue
                if key in self._parts:
                    c = self._parts[key] + c
                    if c.is_zero():
                        del self._parts[key]
                        continue
                self._parts[key] = c

    @property
    def parts(self):
        return dict(self._parts)

    def coefficient(self, key):
        return self._parts.get(tuple(key), NormCoeff(0))

    def constant(self):
        return self.coefficient((0,) * len(self.ring.factors))

    def items(self):
        """ (multidegree, coefficient) pairs in sorted multidegree order """
        return sorted(self._parts.items())

    def is_zero(self):
        return not self._parts

    def graded_part(self, degree):
        """ the homogeneous part of total degree `degree` """
        return GradedClass(self.ring, {k: c for k, c in self._parts.items()
                                       if sum(k) == degree})

    def degrees(self):
        return sorted(set(sum(k) for k in self._parts))

    def map_coefficients(self, f):
        return GradedClass(self.ring, {k: f(c) for k, c in self._parts.items()})

    def _check_ring(self, other):
        if other.ring != self.ring:
            raise ValueError("classes live in different rings: {} and {}".format(
                self.ring, other.ring))

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self._parts == other._parts

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ring, frozenset(self._parts.items())))

    def __add__(self, other):
        if not isinstance(other, GradedClass):
            other = self.ring.one() * other
        self._check_ring(other)
        parts = dict(self._parts)
        for k, c in other._parts.items():
            parts[k] = parts.get(k, NormCoeff(0)) + c
        return GradedClass(self.ring, parts)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            c = NormCoeff.coerce(other)
            return self.map_coefficients(lambda a: a * c)

        self._check_ring(other)
        parts = {}
        for (k1, c1), (k2, c2) in itertools.product(self._parts.items(),
                                                    other._parts.items()):
            key = tuple(a + b for a, b in zip(k1, k2))
            # h_i^{n_i+1} = 0
            if not self.ring.truncates(key):
                continue
            parts[key] = parts.get(key, NormCoeff(0)) + c1 * c2
        return GradedClass(self.ring, parts)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse()**(-n)
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def nilpotent_part(self):
        """ the class minus its degree-zero part """
        return self - self.ring.one() * self.constant()

    def exp(self):
        """ exp of a class without degree-zero part """
        return series_exp(PowerSeries([0, 1]), self.ring.dim).evaluate(self)

    def log(self):
        """ log of a class with degree-zero part 1 """
        if self.constant() != NormCoeff(1):
            raise ValueError("log needs degree-zero part 1, got {}".format(self.constant()))
        return series_log(PowerSeries([1, 1]), self.ring.dim).evaluate(self.nilpotent_part())

    def inverse(self):
        """ multiplicative inverse; the degree-zero part must be a unit """
        c0 = self.constant()
        c0_inv = c0.inverse()
        x = self.nilpotent_part() * c0_inv
        # 1/(1+x) = sum (-x)^k
        geometric = PowerSeries([(-1)**k for k in range(self.ring.dim+1)])
        return geometric.evaluate(x) * c0_inv

    def specialize(self, y0):
        """ substitute y = y0 in every coefficient (coefficients must be polynomials) """
        return self.map_coefficients(lambda c: NormCoeff(c.evaluate(y0)))

    def __repr__(self):
        return "GradedClass({!r}, {})".format(self.ring, str(self))

    def __str__(self):
        if not self._parts:
            return "0"
        terms = []
        for key, c in self.items():
            mono = self.ring.monomial_string(key)
            if mono:
                terms.append("({})*{}".format(c, mono))
            else:
                terms.append("({})".format(c))
        return " + ".join(terms)
