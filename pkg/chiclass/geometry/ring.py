"""
Cohomology rings of products of projective spaces and the degree map.
"""

import itertools

from chiclass.algebra import GradedClass, NormCoeff


class RingDesc(object):
    """
    the ring H^{2*}(P^{n_1} x ... x P^{n_m}, Q) = Q[h_1, ..., h_m]/(h_i^{n_i+1}),
    with h_i the pullback of the hyperplane class of the i-th factor.
    """

    def __init__(self, factors):
        """ factors is a nonempty sequence of positive integers (n_1, ..., n_m) """
        factors = tuple(factors)
        if not factors:
            raise ValueError("a ring needs at least one projective factor")
        for n in factors:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise ValueError("projective factor dimensions must be positive integers, got {}".format(n))
        self.factors = factors

    @property
    def dim(self):
        return sum(self.factors)

    @property
    def nfactors(self):
        return len(self.factors)

    @property
    def top_key(self):
        return self.factors

    @property
    def zero_key(self):
        return (0,) * len(self.factors)

    def truncates(self, key):
        """ True if the monomial with exponents key survives h_i^{n_i+1} = 0 """
        return all(e <= n for e, n in zip(key, self.factors))

    def monomials(self, degree):
        """ all surviving exponent tuples of total degree `degree` """
        ranges = [range(n + 1) for n in self.factors]
        return [k for k in itertools.product(*ranges) if sum(k) == degree]

    def zero(self):
        return GradedClass(self)

    def one(self):
        return GradedClass(self, {self.zero_key: 1})

    def constant(self, c):
        return GradedClass(self, {self.zero_key: c})

    def hyperplane(self, i=0):
        """ the generator h_i """
        if not 0 <= i < len(self.factors):
            raise ValueError("ring {} has no factor {}".format(self, i))
        key = [0] * len(self.factors)
        key[i] = 1
        return GradedClass(self, {tuple(key): 1})

    def linear_form(self, multidegree):
        """ sum_i a_i h_i, the first Chern class of O(a_1, ..., a_m) """
        multidegree = self.as_multidegree(multidegree)
        g = self.zero()
        for i, a in enumerate(multidegree):
            g = g + self.hyperplane(i) * a
        return g

    def as_multidegree(self, a):
        """
        return a as a tuple with one entry per factor; a plain integer is
        accepted for a ring with a single factor
        """
        if isinstance(a, int) and not isinstance(a, bool):
            if len(self.factors) != 1:
                raise ValueError("degree {} is ambiguous on {}; give one entry per factor".format(a, self))
            a = (a,)
        a = tuple(a)
        if len(a) != len(self.factors):
            raise ValueError("multidegree {} does not match ring {}".format(a, self))
        return a

    def monomial_string(self, key):
        names = []
        for i, e in enumerate(key):
            if e == 0:
                continue
            h = "h" if len(self.factors) == 1 else "h{}".format(i+1)
            names.append(h if e == 1 else "{}^{}".format(h, e))
        return "*".join(names)

    def __eq__(self, other):
        if not isinstance(other, RingDesc):
            return NotImplemented
        return self.factors == other.factors

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "RingDesc({})".format(self.factors)

    def __str__(self):
        return " x ".join("P{}".format(n) for n in self.factors)


def projective_ring(factors):
    """ the cohomology ring of P^{n_1} x ... x P^{n_m}; an integer n means P^n """
    if isinstance(factors, int) and not isinstance(factors, bool):
        factors = [factors]
    return RingDesc(factors)


def degree(c):
    """
    the degree map: the coefficient of the top class h_1^{n_1}...h_m^{n_m},
    i.e. the pushforward to a point
    """
    return NormCoeff.coerce(c.coefficient(c.ring.top_key))
