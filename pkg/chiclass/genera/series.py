"""
The genus power series: the normalized and unnormalized Hirzebruch
series Q_y and Q~_y, and the classical Todd, Chern and L series.
"""

import functools
import logging

from sympy import Rational, factorial

from chiclass.algebra import ONE_PLUS_Y, Y, NormCoeff, PowerSeries

logger = logging.getLogger(__name__)

KINDS = ("Ty", "TyTilde", "Todd", "Chern", "L")


class GenusSeries(PowerSeries):
    """
    a power series Q(a) in Q[y, 1/(1+y)][[a]] whose constant term is a
    unit; kind names the genus it defines (one of KINDS, or None for a
    series built by hand)
    """

    def __init__(self, coeffs, order=None, kind=None):
        super(GenusSeries, self).__init__(coeffs, order=order)
        self.kind = kind

    @classmethod
    def from_series(cls, s, kind=None):
        return cls(s.coeffs, kind=kind)

    def specialize(self, y0):
        """ substitute y = y0 in every coefficient """
        s = super(GenusSeries, self).specialize(y0)
        kind = "{}|y={}".format(self.kind, y0) if self.kind else None
        return GenusSeries(s.coeffs, kind=kind)

    def __repr__(self):
        return "GenusSeries({}, order={}: {})".format(self.kind, self.order, str(self))


def _todd_coeffs(order):
    # a/(1 - e^{-a}) = 1 / sum_k (-1)^k a^k/(k+1)!
    denom = PowerSeries([Rational((-1)**k, factorial(k+1)) for k in range(order+1)])
    return denom.reciprocal().coeffs


def _ty(order):
    # Q_y(a) = B((1+y)a) - y a with B the Todd series
    b = PowerSeries(_todd_coeffs(order)).rescale(ONE_PLUS_Y)
    return (b - PowerSeries([0, Y], order=order)).coeffs


def lambda_y_series(order):
    """ 1 + y e^{-a}, whose multiplicative class is ch(Lambda_y E^*) """
    coeffs = [1 + Y] + [Y * Rational((-1)**j, factorial(j)) for j in range(1, order+1)]
    return GenusSeries(coeffs, kind="LambdaY")


def _ty_tilde(order):
    # B(a) (1 + y e^{-a})
    b = PowerSeries(_todd_coeffs(order))
    return (b * lambda_y_series(order)).coeffs


def _chern(order):
    return PowerSeries([1, 1], order=order).coeffs


def _l_series(order):
    # a/tanh(a) = cosh(a) / (sinh(a)/a)
    cosh = PowerSeries([Rational(1, factorial(j)) if j % 2 == 0 else 0
                        for j in range(order+1)])
    sinh_a = PowerSeries([Rational(1, factorial(j+1)) if j % 2 == 0 else 0
                          for j in range(order+1)])
    return (cosh * sinh_a.reciprocal()).coeffs


_BUILDERS = {"Ty": _ty,
             "TyTilde": _ty_tilde,
             "Todd": _todd_coeffs,
             "Chern": _chern,
             "L": _l_series}


@functools.lru_cache(maxsize=None)
def standard_series(kind, order):
    """
    return the genus series of the given kind truncated at a^order:

    * Ty: Q_y(a) = a(1+y)/(1 - e^{-a(1+y)}) - a y

    * TyTilde: Q~_y(a) = a(1 + y e^{-a})/(1 - e^{-a})

    * Todd: a/(1 - e^{-a});  Chern: 1 + a;  L: a/tanh(a)
    """
    if kind not in _BUILDERS:
        raise ValueError("unknown genus series {!r}, expected one of {}".format(kind, KINDS))
    if order < 0:
        raise ValueError("series order must be non-negative, got {}".format(order))

    logger.debug("building %s series to order %d", kind, order)
    return GenusSeries(_BUILDERS[kind](order), order=order, kind=kind)


def verify_series_relation(order):
    """
    the residual Q_y(a) - (1+y)^{-1} Q~_y((1+y) a) truncated at a^order,
    which vanishes identically
    """
    if order < 1:
        raise ValueError("series relation needs order >= 1, got {}".format(order))
    q = standard_series("Ty", order)
    qt = standard_series("TyTilde", order)
    rhs = qt.rescale(ONE_PLUS_Y).scale(NormCoeff(1, 1))
    return GenusSeries((q - rhs).coeffs, kind="residual")
