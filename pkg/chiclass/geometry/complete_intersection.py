"""
Global complete intersections X = {s_1 = ... = s_r = 0} in a product of
projective spaces, described only by the multidegrees of the sections.
Every class "on X" is represented by its ambient pullback; capping with
[X] is multiplication by the fundamental class.
"""

import logging

from chiclass.algebra import clear_denominator, evaluate_ypoly
from chiclass.geometry.bundles import KClass, line_bundle, tangent_kclass
from chiclass.geometry.ring import RingDesc, degree, projective_ring

logger = logging.getLogger(__name__)


def _check_multidegrees(ring, multidegrees):
    out = []
    for a in multidegrees:
        a = ring.as_multidegree(a)
        for d in a:
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise ValueError("multidegree entries must be positive integers, got {}".format(a))
        out.append(a)
    return tuple(out)


def intersection_class(ring, multidegrees):
    """ prod_j (a_j . h), the class Poincare dual to the common zero locus """
    c = ring.one()
    for a in multidegrees:
        c = c * ring.linear_form(a)
    return c


def normal_kclass(ring, multidegrees):
    """ the normal bundle sum_j O(a_j) of the zero locus """
    return KClass([line_bundle(ring, a) for a in multidegrees], ring=ring)


def virtual_tangent_kclass(ring, multidegrees):
    """ [T P|_X] - [N_X], for any number of sections (including zero-dimensional loci) """
    return tangent_kclass(ring) - normal_kclass(ring, multidegrees)


class CompleteIntersection(object):
    """
    the zero locus of r sections of line bundles O(a_1), ..., O(a_r) on
    the ambient product of projective spaces, with 0 <= r < dim.  The
    degree sequence need not be decreasing.
    """

    def __init__(self, ambient, multidegrees=()):
        if not isinstance(ambient, RingDesc):
            raise TypeError("ambient must be a RingDesc, got {!r}".format(ambient))
        self.ambient = ambient
        self.multidegrees = _check_multidegrees(ambient, multidegrees)
        if self.r >= ambient.dim:
            raise ValueError("a complete intersection of {} hypersurfaces in {} "
                             "is not positive dimensional".format(self.r, ambient))

    @property
    def r(self):
        return len(self.multidegrees)

    @property
    def dim(self):
        return self.ambient.dim - self.r

    @property
    def label(self):
        if not self.multidegrees:
            return str(self.ambient)
        if self.ambient.nfactors == 1:
            degs = ",".join(str(a[0]) for a in self.multidegrees)
        else:
            degs = ",".join("({})".format(",".join(str(d) for d in a))
                            for a in self.multidegrees)
        return "({}) in {}".format(degs, self.ambient)

    def __eq__(self, other):
        if not isinstance(other, CompleteIntersection):
            return NotImplemented
        return self.ambient == other.ambient and self.multidegrees == other.multidegrees

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ambient, self.multidegrees))

    def __repr__(self):
        return "CompleteIntersection({!r}, {})".format(self.ambient, list(self.multidegrees))

    def __str__(self):
        return self.label


def complete_intersection(factors, multidegrees=()):
    """ convenience constructor: complete_intersection(3, [4]) is a quartic surface """
    return CompleteIntersection(projective_ring(factors), multidegrees)


def virtual_tangent(ci):
    return virtual_tangent_kclass(ci.ambient, ci.multidegrees)


def fundamental_class(ci):
    return intersection_class(ci.ambient, ci.multidegrees)


def top_chern_degree(ci):
    """
    the virtual Euler characteristic: the degree of c_{dim X}(T_vir X)
    capped with [X], as a rational number
    """
    c_top = virtual_tangent(ci).chern_classes()[ci.dim]
    e = degree(c_top * fundamental_class(ci))
    logger.debug("virtual Euler characteristic of %s is %s", ci, e)
    return evaluate_ypoly(clear_denominator(e), 0)
