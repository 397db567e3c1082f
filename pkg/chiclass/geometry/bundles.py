"""
Vector bundles described by rank and total Chern class, and their
formal differences (classes in K^0).  Chern roots are never
materialized: power sums of the roots come from Newton's identities.
"""

from chiclass.algebra import GradedClass


def newton_power_sums(chern, order):
    """
    given the elementary symmetric functions e_1, e_2, ... of the roots
    (chern[k] = e_k, chern[0] = 1) return the power sums p_0..p_order,
    p_0 omitted (set to None), from

        p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1+i) e_{k-i} p_i
    """
    ring = chern[0].ring

    def e(k):
        return chern[k] if k < len(chern) else ring.zero()

    p = [None]
    for k in range(1, order+1):
        pk = e(k) * ((-1)**(k-1) * k)
        for i in range(1, k):
            pk = pk + e(k-i) * p[i] * (-1)**(k-1+i)
        p.append(pk)
    return p


class BundleDesc(object):
    """ a vector bundle of the given rank with total Chern class c = 1 + c_1 + ... """

    def __init__(self, rank, total_chern):
        if not isinstance(rank, int) or rank < 0:
            raise ValueError("bundle rank must be a non-negative integer, got {}".format(rank))
        if not isinstance(total_chern, GradedClass):
            raise TypeError("total Chern class must be a GradedClass")
        if total_chern.constant() != 1:
            raise ValueError("total Chern class must start with 1, got {}".format(total_chern))
        if total_chern.degrees() and max(total_chern.degrees()) > rank:
            raise ValueError("Chern classes of a rank {} bundle vanish above degree {}".format(rank, rank))
        self.rank = rank
        self.total_chern = total_chern

    @property
    def ring(self):
        return self.total_chern.ring

    def chern_class(self, k):
        return self.total_chern.graded_part(k)

    def power_sums(self, order=None):
        """ p_1, ..., p_order of the Chern roots (index 0 unused) """
        if order is None:
            order = self.ring.dim
        chern = [self.chern_class(k) for k in range(self.ring.dim + 1)]
        return newton_power_sums(chern, order)

    def __eq__(self, other):
        if not isinstance(other, BundleDesc):
            return NotImplemented
        return self.rank == other.rank and self.total_chern == other.total_chern

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.rank, self.total_chern))

    def __repr__(self):
        return "BundleDesc(rank={}, c={})".format(self.rank, self.total_chern)


def line_bundle(ring, multidegree):
    """ O(a_1, ..., a_m), with c = 1 + sum a_i h_i """
    return BundleDesc(1, ring.one() + ring.linear_form(multidegree))


def trivial_bundle(ring, rank=1):
    return BundleDesc(rank, ring.one())


class KClass(object):
    """
    a virtual bundle [plus_1] + ... - [minus_1] - ..., i.e. a formal
    difference of bundles in K^0 of the ambient ring
    """

    def __init__(self, plus=None, minus=None, ring=None):
        self.plus = tuple(plus or ())
        self.minus = tuple(minus or ())
        bundles = self.plus + self.minus
        if ring is None:
            if not bundles:
                raise ValueError("an empty KClass needs an explicit ring")
            ring = bundles[0].ring
        for b in bundles:
            if b.ring != ring:
                raise ValueError("bundle on {} in a KClass on {}".format(b.ring, ring))
        self.ring = ring

    @property
    def virtual_rank(self):
        return sum(b.rank for b in self.plus) - sum(b.rank for b in self.minus)

    def total_chern(self):
        """ prod c(plus) / prod c(minus), a unit in the truncated ring """
        c = self.ring.one()
        for b in self.plus:
            c = c * b.total_chern
        for b in self.minus:
            c = c * b.total_chern.inverse()
        return c

    def chern_classes(self):
        """ [c_0, c_1, ..., c_n] with n the ring dimension """
        c = self.total_chern()
        return [c.graded_part(k) for k in range(self.ring.dim + 1)]

    def power_sums(self, order=None):
        """ p_k(E) = sum over plus-roots of a^k - sum over minus-roots of b^k """
        if order is None:
            order = self.ring.dim
        p = [None] + [self.ring.zero() for _ in range(order)]
        for sign, bundles in ((1, self.plus), (-1, self.minus)):
            for b in bundles:
                pb = b.power_sums(order)
                for k in range(1, order+1):
                    p[k] = p[k] + pb[k] * sign
        return p

    def __add__(self, other):
        if other.ring != self.ring:
            raise ValueError("KClasses on different rings")
        return KClass(self.plus + other.plus, self.minus + other.minus, ring=self.ring)

    def __neg__(self):
        return KClass(self.minus, self.plus, ring=self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return "KClass(rank={}, plus={}, minus={})".format(
            self.virtual_rank, len(self.plus), len(self.minus))


def chern_classes(E, ring=None):
    """ the Chern classes c_0, ..., c_n of the KClass E """
    if ring is not None and ring != E.ring:
        raise ValueError("KClass on {} asked for Chern classes on {}".format(E.ring, ring))
    return E.chern_classes()


def tangent_kclass(ring):
    """
    the tangent bundle of P^{n_1} x ... x P^{n_m} through the Euler
    sequences: O(h_i)^{n_i+1} minus one trivial line bundle per factor
    """
    plus = []
    minus = []
    for i, n in enumerate(ring.factors):
        a = [0] * ring.nfactors
        a[i] = 1
        plus += [line_bundle(ring, a) for _ in range(n + 1)]
        minus.append(trivial_bundle(ring))
    return KClass(plus, minus, ring=ring)
