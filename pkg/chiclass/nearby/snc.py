"""
The motivic nearby fiber at genus level, from the combinatorics of an
embedded resolution whose total transform of the fiber is a divisor with
simple normal crossings.

For a nonempty set I of components, E_I^o is the open stratum where
exactly the components in I meet, and E~_I^o is its unramified cover of
degree m_I = gcd(m_i : i in I).  The cover is not constructed: the user
supplies the chi_y of a smooth compactification E~_I together with the
chi_y of its boundary strata E~_{I,J}.
"""

import logging
from math import gcd

from sympy import binomial

from chiclass.algebra import ONE_PLUS_Y, Y, ZERO_POLY, evaluate_ypoly, ypoly

logger = logging.getLogger(__name__)


def incl_excl_open(table):
    """
    chi_y of the open part of a compactification, from entries
    (|J|, chi_y(E~_{I,J})): sum_J (-1)^{|J|} chi_y(E~_{I,J}).  The
    compactification itself is the entry with |J| = 0.
    """
    total = ZERO_POLY
    have_zero = False
    for size, chi in table:
        if not isinstance(size, int) or size < 0:
            raise ValueError("boundary stratum size must be a non-negative integer, got {}".format(size))
        if size == 0:
            have_zero = True
        total = total + ypoly(chi) * (-1)**size
    if not have_zero:
        raise ValueError("the table has no |J| = 0 entry for the compactification itself")
    return total


def stalk_multiplicities(k):
    """ nu(I, i) = C(k-1, i), i = 0..k-1, for a stratum where k components meet """
    if k < 1:
        raise ValueError("a stratum needs at least one component, got {}".format(k))
    return [int(binomial(k-1, i)) for i in range(k)]


def stratum_weight(k):
    """ sum_i nu(I, i) y^i, which resums to (1+y)^{k-1} """
    weight = ypoly(sum(nu * Y**i for i, nu in enumerate(stalk_multiplicities(k))))
    assert weight == ONE_PLUS_Y**(k-1)
    return weight


class SncStratum(object):
    """
    the data attached to the stratum E_I^o: the cover genus table, whether
    I lies over the singular locus Sigma of the fiber, and optionally
    chi_y of the base E_I^o itself
    """

    def __init__(self, components, table, over_sigma=False, base_chi_y=None):
        self.components = frozenset(components)
        if not self.components:
            raise ValueError("a stratum needs at least one component")
        self.table = [(size, ypoly(chi)) for size, chi in table]
        self.over_sigma = over_sigma
        self.base_chi_y = ypoly(base_chi_y) if base_chi_y is not None else None

    @property
    def label(self):
        return "E_{{{}}}".format(",".join(str(i) for i in sorted(self.components, key=str)))

    def cover_chi_y(self):
        """ chi_y of the open cover E~_I^o """
        return incl_excl_open(self.table)

    def __repr__(self):
        return "SncStratum({}, over_sigma={})".format(self.label, self.over_sigma)


class SncResolution(object):
    """
    components: (id, multiplicity) pairs with multiplicity >= 1.
    strata: SncStratum records, one per stratum lying over the point of
    the base whose nearby fiber is computed.  sigma_chi_y and
    sigma_x_prime_chi_y are chi_y(Sigma) and chi_y(Sigma cap X') for the
    vanishing cycle variant (zero when omitted).
    """

    def __init__(self, components, strata=(), sigma_chi_y=None, sigma_x_prime_chi_y=None):
        self.multiplicities = {}
        for cid, m in components:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError("multiplicity of component {} must be a positive integer, "
                                 "got {}".format(cid, m))
            if cid in self.multiplicities:
                raise ValueError("component {} listed twice".format(cid))
            self.multiplicities[cid] = m

        self.strata = list(strata)
        seen = set()
        for s in self.strata:
            unknown = s.components - set(self.multiplicities)
            if unknown:
                raise ValueError("stratum {} uses unknown components {}".format(s.label, sorted(unknown, key=str)))
            if s.components in seen:
                raise ValueError("stratum {} listed twice".format(s.label))
            seen.add(s.components)

        self.sigma_chi_y = ypoly(sigma_chi_y) if sigma_chi_y is not None else ZERO_POLY
        self.sigma_x_prime_chi_y = (ypoly(sigma_x_prime_chi_y)
                                    if sigma_x_prime_chi_y is not None else ZERO_POLY)

    def m_I(self, components):
        """ the gcd of the multiplicities of the components in I """
        g = 0
        for i in components:
            g = gcd(g, self.multiplicities[i])
        return g

    def stratum(self, components):
        components = frozenset(components)
        for s in self.strata:
            if s.components == components:
                return s
        raise ValueError("missing stratum data for {}".format(sorted(components, key=str)))


def _contribution(s):
    k = len(s.components)
    try:
        chi = s.cover_chi_y()
    except ValueError as err:
        raise ValueError("missing stratum data for {}: {}".format(s.label, err))
    return chi * stratum_weight(k)


def motivic_nearby_degree0(r):
    """
    (psi, phi_on_sigma): chi_y of the nearby fiber, and of the
    vanishing cycles restricted to Sigma,

        psi = sum_I chi_y(E~_I^o) (1+y)^{|I|-1}
        phi = sum_{I over Sigma} chi_y(E~_I^o) (1+y)^{|I|-1} - chi_y(Sigma) + chi_y(Sigma cap X')
    """
    psi = ZERO_POLY
    phi = ZERO_POLY
    for s in r.strata:
        c = _contribution(s)
        psi = psi + c
        if s.over_sigma:
            phi = phi + c
    phi = phi - r.sigma_chi_y + r.sigma_x_prime_chi_y
    logger.debug("nearby fiber over %d strata: psi = %s, phi = %s",
                 len(r.strata), psi.as_expr(), phi.as_expr())
    return psi, phi


def acampo_euler(r):
    """
    sum over the single components of m_i e(E_i^o), which is the Euler
    characteristic of the nearby fiber; needs base_chi_y on every
    one-component stratum
    """
    e = 0
    for s in r.strata:
        if len(s.components) != 1:
            continue
        if s.base_chi_y is None:
            raise ValueError("stratum {} has no base genus".format(s.label))
        (i,) = s.components
        e += r.multiplicities[i] * evaluate_ypoly(s.base_chi_y, -1)
    return e


def check_cover_degrees(r):
    """
    the labels of strata whose cover genus is inconsistent with an
    unramified cover of degree m_I, e(E~_I^o) = m_I e(E_I^o); only strata
    with a base genus are checked
    """
    bad = []
    for s in r.strata:
        if s.base_chi_y is None:
            continue
        cover = evaluate_ypoly(s.cover_chi_y(), -1)
        base = evaluate_ypoly(s.base_chi_y, -1)
        if cover != r.m_I(s.components) * base:
            logger.warning("stratum %s: e(cover) = %s but m_I e(base) = %s",
                           s.label, cover, r.m_I(s.components) * base)
            bad.append(s.label)
    return bad
