"""
Multiplicative sequences by the splitting principle.  For a series Q
and a virtual bundle E with formal Chern roots a_i (positive part) and
b_j (negative part), prod_i Q(a_i) / prod_j Q(b_j) equals

    Q_0^rank(E) exp( sum_k L_k p_k(E) ),     L = log(Q/Q_0),

where p_k(E) are the power sums of the roots computed from the Chern
classes by Newton's identities.
"""

import logging

from sympy import Rational, factorial

from chiclass.algebra import series_log
from chiclass.genera.series import lambda_y_series

logger = logging.getLogger(__name__)


def _check_ring(E, ring):
    if ring is not None and ring != E.ring:
        raise ValueError("KClass lives on {}, not on {}".format(E.ring, ring))
    return E.ring


def multiplicative_class(Q, E, ring=None):
    """
    the class prod Q(a_i) / prod Q(b_j) of the KClass E in its ambient
    truncated ring.  Q must have a unit constant term and order at least
    the ring dimension.
    """
    ring = _check_ring(E, ring)
    n = ring.dim
    if Q.order < n:
        raise ValueError("series of order {} is too short for {} (dimension {})".format(
            Q.order, ring, n))

    q0 = Q[0]
    try:
        q0_inv = q0.inverse()
    except ValueError:
        raise ValueError("series constant term {} is not a unit".format(q0))

    logger.debug("multiplicative class of the %s series for %r on %s",
                 getattr(Q, "kind", None), E, ring)
    log_q = series_log(Q.scale(q0_inv).truncate(n), n)
    p = E.power_sums(n)

    s = ring.zero()
    for k in range(1, n+1):
        s = s + p[k] * log_q[k]

    return s.exp() * (q0**E.virtual_rank)


def chern_character(E, ring=None):
    """ ch(E) = rank(E) + sum_m p_m(E)/m! """
    ring = _check_ring(E, ring)
    p = E.power_sums(ring.dim)
    ch = ring.constant(E.virtual_rank)
    for m in range(1, ring.dim+1):
        ch = ch + p[m] * Rational(1, factorial(m))
    return ch


def lambda_y_character(E, ring=None):
    """ ch(Lambda_y E^*) = sum_p ch(Lambda^p E^*) y^p, inverted on the negative part of E """
    ring = _check_ring(E, ring)
    return multiplicative_class(lambda_y_series(ring.dim), E)
