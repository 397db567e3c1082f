"""
Hirzebruch classes of complete intersections: the smooth class
T_y^*(TX) cap [X], and the two routes to the virtual class

    td_(1+y)* ( ch(Lambda_y T^*_vir X) td(T_vir X) cap [X] )    (de Rham side)
    T_y^*(T_vir X) cap [X]                                      (characteristic class side)

which agree exactly.
"""

import logging

from chiclass.classes.homology import HomologyClass, clear_denominators, normalize_1py
from chiclass.genera import lambda_y_character, multiplicative_class, standard_series
from chiclass.geometry import intersection_class, virtual_tangent_kclass

logger = logging.getLogger(__name__)


def dr_character(ring, multidegrees):
    """
    ch(Lambda_y T^*_vir) for the zero locus of sections of O(a_j),
    the Chern character of the virtual de Rham class
    """
    return lambda_y_character(virtual_tangent_kclass(ring, multidegrees))


def td_1py_star_locus(ring, multidegrees, dr_class):
    """
    td_(1+y)* of a K-theory class on the zero locus X of sections of
    O(a_j), given by its Chern character dr_class: multiply by td(T_vir X),
    cap with [X] and rescale by (1+y)^{-k} in homology degree k.

    The locus may be zero dimensional.
    """
    dim_x = ring.dim - len(multidegrees)
    if dim_x < 0:
        raise ValueError("{} sections on {} cut out the empty set".format(len(multidegrees), ring))
    tvir = virtual_tangent_kclass(ring, multidegrees)
    todd = multiplicative_class(standard_series("Todd", ring.dim), tvir)
    c = dr_class * todd * intersection_class(ring, multidegrees)
    return normalize_1py(HomologyClass(c, dim_x))


def td_1py_star(ci, dr_class):
    """ td_(1+y)* of a class on the complete intersection ci """
    return td_1py_star_locus(ci.ambient, ci.multidegrees, dr_class)


def virtual_class_of_locus(ring, multidegrees):
    """ the de Rham route on a zero locus of any dimension, denominators cleared """
    c = td_1py_star_locus(ring, multidegrees, dr_character(ring, multidegrees))
    return clear_denominators(c)


def virtual_class_via_DR(ci):
    """
    T_y^vir*(X) = td_(1+y)* DR_y^vir[X].  Every coefficient is certified
    polynomial in y; NotPolynomial here means the computation is broken.
    """
    logger.debug("virtual class of %s through the de Rham route", ci)
    return virtual_class_of_locus(ci.ambient, ci.multidegrees)


def virtual_class_via_Ty(ci):
    """ T_y^vir*(X) = T_y^*(T_vir X) cap [X] """
    logger.debug("virtual class of %s through the T_y series", ci)
    tvir = virtual_tangent_kclass(ci.ambient, ci.multidegrees)
    ty = multiplicative_class(standard_series("Ty", ci.ambient.dim), tvir)
    return HomologyClass(ty * intersection_class(ci.ambient, ci.multidegrees), ci.dim)


def hirzebruch_class_smooth(ci):
    """
    T_y*(X) = T_y^*(TX) cap [X] for a smooth member X of the linear
    system; smoothness is assumed, not checked
    """
    logger.debug("assuming %s is smooth", ci)
    return virtual_class_via_Ty(ci)


def chi_y_virtual(ci):
    """ the degree-zero part of the virtual Hirzebruch class, a polynomial in y """
    return virtual_class_via_Ty(ci).chi_y()
