"""
Euler characteristics chi(Omega^p_X) of smooth complete intersections
by binomial arithmetic alone: the Euler sequence on each projective
factor, then for every hypersurface section the restriction sequence
and the conormal sequence.  No cohomology group is ever computed.
"""

import itertools
import logging

from sympy import binomial, factorial, rf

from chiclass.algebra import Y, ypoly

logger = logging.getLogger(__name__)


def chi_line_bundle_pn(n, k):
    """ chi(O_{P^n}(k)) = C(n+k, n), as a polynomial in k valid for every integer k """
    return int(rf(k + 1, n) / factorial(n))


def chi_omega_pn(n, p, k):
    """ chi(Omega^p_{P^n}(k)) from chi(Omega^p(k)) = C(n+1, p) chi(O(k-p)) - chi(Omega^{p-1}(k)) """
    if p < 0 or p > n:
        return 0
    chi = chi_line_bundle_pn(n, k)
    for q in range(1, p+1):
        chi = int(binomial(n+1, q)) * chi_line_bundle_pn(n, k - q) - chi
    return chi


class SheafEulerTable(object):
    """
    memoized chi(Omega^p_{X_j}(k)) for the successive complete
    intersections X_0 = ambient, X_j = X_{j-1} cap {s_j = 0}
    """

    def __init__(self, ring, multidegrees):
        self.ring = ring
        self.multidegrees = [ring.as_multidegree(a) for a in multidegrees]
        self._memo = {}

    def _ambient(self, p, k):
        # Kunneth: Omega^p of a product is the sum of the exterior products
        total = 0
        ranges = [range(n + 1) for n in self.ring.factors]
        for ps in itertools.product(*ranges):
            if sum(ps) != p:
                continue
            term = 1
            for n, pi, ki in zip(self.ring.factors, ps, k):
                term *= chi_omega_pn(n, pi, ki)
            total += term
        return total

    def chi(self, j, p, k):
        """ chi(Omega^p_{X_j}(k)), k a multidegree twist """
        if p < 0:
            return 0
        key = (j, p, k)
        if key in self._memo:
            return self._memo[key]

        if j == 0:
            value = self._ambient(p, k)
        else:
            a = self.multidegrees[j-1]
            k_minus_a = tuple(ki - ai for ki, ai in zip(k, a))
            # Omega^p_{X_{j-1}} restricted to X_j
            restricted = self.chi(j-1, p, k) - self.chi(j-1, p, k_minus_a)
            # 0 -> Omega^{p-1}_{X_j}(-a) -> Omega^p_{X_{j-1}}|X_j -> Omega^p_{X_j} -> 0
            value = restricted - self.chi(j, p-1, k_minus_a)

        self._memo[key] = value
        return value


def sheaf_euler_omega(ci, p):
    """ chi(Omega^p_X) for a smooth member X of the complete intersection family ci """
    if not 0 <= p <= ci.dim:
        raise ValueError("p = {} is outside 0..{} for {}".format(p, ci.dim, ci))
    table = SheafEulerTable(ci.ambient, ci.multidegrees)
    return table.chi(ci.r, p, ci.ambient.zero_key)


def chi_y_smooth_oracle(ci):
    """ chi_y(X) = sum_p chi(Omega^p_X) y^p """
    table = SheafEulerTable(ci.ambient, ci.multidegrees)
    chi = sum(table.chi(ci.r, p, ci.ambient.zero_key) * Y**p for p in range(ci.dim + 1))
    logger.debug("sheaf Euler oracle on %s: %s", ci, chi)
    return ypoly(chi)
