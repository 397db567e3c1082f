"""
Homology classes on a complete intersection X, stored through their
ambient representation c . [X] in the cohomology ring of the ambient
product of projective spaces.

The part of homology degree k (a cycle of complex dimension k) is the
part of ambient cohomological degree n - k, n the ambient dimension.
All conversions between the two gradings go through HomologyClass.
"""

from chiclass.algebra import (GradedClass, NormCoeff, clear_denominator,
                              ypoly, Y)
from chiclass.geometry import degree


class HomologyClass(object):
    """ a class in H_*(X)[y] (or with (1+y)-denominators) for X of dimension dim_x """

    def __init__(self, underlying, dim_x):
        if not isinstance(underlying, GradedClass):
            raise TypeError("a homology class wraps a GradedClass")
        if not 0 <= dim_x <= underlying.ring.dim:
            raise ValueError("dimension {} does not fit in {}".format(dim_x, underlying.ring))
        low = underlying.ring.dim - dim_x
        for d in underlying.degrees():
            if d < low:
                raise ValueError("class has ambient degree {} below the codimension {} of X".format(
                    d, low))
        self.underlying = underlying
        self.dim_x = dim_x

    @property
    def ring(self):
        return self.underlying.ring

    def ambient_degree(self, k):
        """ the ambient cohomological degree holding homology degree k """
        return self.ring.dim - k

    def homology_degree(self, d):
        return self.ring.dim - d

    def part(self, k):
        """ the part of homology degree k, as an ambient GradedClass """
        return self.underlying.graded_part(self.ambient_degree(k))

    def degree_zero(self):
        """ the pushforward to a point: the coefficient of the class of a point """
        return degree(self.underlying)

    def chi_y(self):
        """ the degree-zero part as a polynomial in y """
        return clear_denominator(self.degree_zero())

    def map_coefficients(self, f):
        return HomologyClass(self.underlying.map_coefficients(f), self.dim_x)

    def is_polynomial(self):
        return all(c.is_polynomial() for _, c in self.underlying.items())

    def __eq__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return self.dim_x == other.dim_x and self.underlying == other.underlying

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.dim_x, self.underlying))

    def __add__(self, other):
        if self.dim_x != other.dim_x:
            raise ValueError("cannot add classes on spaces of dimension {} and {}".format(
                self.dim_x, other.dim_x))
        return HomologyClass(self.underlying + other.underlying, self.dim_x)

    def __neg__(self):
        return HomologyClass(-self.underlying, self.dim_x)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        """ multiplication by a scalar coefficient """
        return HomologyClass(self.underlying * NormCoeff.coerce(c), self.dim_x)

    __rmul__ = __mul__

    def __repr__(self):
        return "HomologyClass(dim_x={}, {})".format(self.dim_x, self.underlying)

    def __str__(self):
        terms = []
        for k in range(self.dim_x, -1, -1):
            p = self.part(k)
            if not p.is_zero():
                terms.append("[{}]_{}".format(p, k))
        return " + ".join(terms) if terms else "0"


def normalize_1py(c):
    """ multiply the homology-degree-k part by (1+y)^{-k} """
    parts = {}
    for key, coeff in c.underlying.items():
        k = c.homology_degree(sum(key))
        parts[key] = coeff * NormCoeff(1, k)
    return HomologyClass(GradedClass(c.ring, parts), c.dim_x)


def clear_denominators(c):
    """ certify every coefficient of c as a polynomial; raises NotPolynomial """
    return c.map_coefficients(lambda a: NormCoeff(clear_denominator(a)))


def specialize(c, y0):
    """
    substitute y = y0 (one of -1, 0, 1) in every coefficient.  The
    coefficients are certified polynomial first, so no (1+y) pole is
    ever evaluated at y = -1.
    """
    if y0 not in (-1, 0, 1):
        raise ValueError("specialization is defined at y = -1, 0, 1, not {}".format(y0))
    return clear_denominators(c).map_coefficients(lambda a: NormCoeff(a.evaluate(y0)))


def tate_twist(c, k):
    """
    the effect of the Tate twist M(k) on the class: multiplication by
    (-y)^{-k}.  Only k <= 0 is supported, since y is not inverted.
    """
    if k > 0:
        raise ValueError("Tate twist by k = {} would need 1/y".format(k))
    return c * ypoly((-Y)**(-k))
