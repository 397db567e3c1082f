"""
The logarithmic de Rham route for the constant variation: T_y* of the
extension by zero of Q from U = Z minus D, with D a simple normal
crossing divisor whose components are hypersurfaces of given
multidegrees in the ambient product of projective spaces Z.

The Deligne extension of the trivial variation with residue eigenvalues
in (0, 1] is O_Z(-D), and Omega^q_Z(log D)(-D) has the resolution
Omega^q_Z -> (+) Omega^q_{D_i} -> (+) Omega^q_{D_ij} -> ..., so the class is

    sum_J (-1)^{|J|} td_(1+y)*( Lambda_y T^*_vir D_J cap [D_J] ).
"""

import itertools
import logging

from chiclass.classes import HomologyClass, virtual_class_of_locus
from chiclass.geometry import RingDesc

logger = logging.getLogger(__name__)


class LogPair(object):
    """ a smooth ambient Z with an SNC divisor D given by the multidegrees of its components """

    def __init__(self, ring, divisors=()):
        if not isinstance(ring, RingDesc):
            raise TypeError("ambient of a log pair must be a RingDesc")
        self.ring = ring
        divs = []
        for a in divisors:
            a = ring.as_multidegree(a)
            if any(not isinstance(d, int) or isinstance(d, bool) or d < 0 for d in a):
                raise ValueError("divisor multidegree entries must be non-negative integers, got {}".format(a))
            # a fiber such as (1, 0) is allowed, the zero bundle is not
            if not any(a):
                raise ValueError("divisor multidegree {} is zero".format(a))
            divs.append(a)
        self.divisors = tuple(divs)

    def intersections(self):
        """ (J, multidegrees of D_J) for every subset J of the components, D_J nonempty """
        out = []
        for k in range(len(self.divisors) + 1):
            if k > self.ring.dim:
                logger.debug("skipping %d-fold intersections on %s: empty", k, self.ring)
                break
            for J in itertools.combinations(range(len(self.divisors)), k):
                out.append((J, [self.divisors[j] for j in J]))
        return out

    def strata_table(self):
        """ entries (|J|, chi_y(D_J)) for the inclusion-exclusion of the open part """
        return [(len(J), virtual_class_of_locus(self.ring, mdegs).chi_y())
                for J, mdegs in self.intersections()]

    def __repr__(self):
        return "LogPair({!r}, {})".format(self.ring, list(self.divisors))


def log_dr_trivial(pair):
    """ T_y*((j_U)_! Q_U) as a homology class on Z, U the complement of D """
    n = pair.ring.dim
    total = HomologyClass(pair.ring.zero(), n)
    for J, mdegs in pair.intersections():
        c = virtual_class_of_locus(pair.ring, mdegs)
        # D_J has codimension |J|
        assert all(d >= len(J) for d in c.underlying.degrees())
        term = HomologyClass(c.underlying, n)
        total = total + term if len(J) % 2 == 0 else total - term
    return total
