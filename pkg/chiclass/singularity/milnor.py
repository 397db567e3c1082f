"""
Point-supported Hirzebruch-Milnor classes of complete intersections with
isolated singularities, and the degree-zero checks relating them to the
virtual class.
"""

import logging

from chiclass.algebra import ZERO_POLY, clear_denominator, ypoly
from chiclass.classes import virtual_class_via_Ty
from chiclass.geometry import top_chern_degree
from chiclass.singularity.spectrum import SpectrumData, Weights, chi_y_milnor_fiber, spectrum_wh

logger = logging.getLogger(__name__)


class IsolatedSingularPoint(object):
    """
    an isolated hypersurface singularity x, known either through the
    weights of a weighted homogeneous local equation or through its
    spectrum
    """

    def __init__(self, label, weights=None, spectrum=None):
        if (weights is None) == (spectrum is None):
            raise ValueError("singular point {} needs exactly one of weights and spectrum".format(label))
        if weights is not None and not isinstance(weights, Weights):
            weights = Weights(weights)
        if spectrum is not None and not isinstance(spectrum, SpectrumData):
            raise TypeError("spectrum of {} must be a SpectrumData".format(label))
        self.label = label
        self.weights = weights
        self._spectrum = spectrum

    @property
    def n(self):
        """ the number of local variables """
        if self.weights is not None:
            return self.weights.n
        return self._spectrum.n

    def spectrum(self):
        if self._spectrum is None:
            self._spectrum = spectrum_wh(self.weights)
        return self._spectrum

    @property
    def mu(self):
        return self.spectrum().mu

    def chi_y(self):
        """ chi_y of the reduced cohomology of the Milnor fiber at this point """
        return chi_y_milnor_fiber(self.spectrum())

    def __repr__(self):
        data = self.weights if self.weights is not None else self._spectrum
        return "IsolatedSingularPoint({!r}, {!r})".format(self.label, data)


def _check_local_dimension(ci, sings):
    for x in sings:
        if x.n != ci.dim + 1:
            raise ValueError("singular point {} has {} local variables; on {} (dimension {}) "
                             "it needs {}".format(x.label, x.n, ci, ci.dim, ci.dim + 1))


def milnor_class_isolated(ci, sings):
    """ M_y(X) = sum over the singular points of chi_y(H~(F_x)), a polynomial in y """
    _check_local_dimension(ci, sings)
    m = ZERO_POLY
    for x in sings:
        m = m + x.chi_y()
    return m


def verify_cor2_degree0(ci, sings, chi_y_of_x):
    """
    the residual chi_y^vir(X) - chi_y(X) - M_y(X) in degree zero, where
    chi_y_of_x comes from an independent computation; it vanishes
    """
    virtual = clear_denominator(virtual_class_via_Ty(ci).degree_zero())
    residual = virtual - ypoly(chi_y_of_x) - milnor_class_isolated(ci, sings)
    logger.info("degree-zero Milnor class residual on %s: %s", ci, residual.as_expr())
    return residual


def hm_recursion_degree0(levels):
    """
    the degree-zero part of M_y(X) from the recursion over the
    successive singular loci: the sum of the per-level contributions
    """
    if not levels:
        logger.warning("empty list of recursion levels; the input is smooth")
        return ZERO_POLY
    m = ZERO_POLY
    for level in levels:
        m = m + ypoly(level)
    return m


def total_milnor_number(sings):
    return sum(x.mu for x in sings)


def verify_cor1_degree0(ci, sings, euler_of_x):
    """
    the residual e^vir(X) - e(X) - (-1)^{dim X} sum_x mu_x of the Euler
    characteristic form of the Milnor class formula; it vanishes
    """
    _check_local_dimension(ci, sings)
    residual = (top_chern_degree(ci) - euler_of_x -
                (-1)**ci.dim * total_milnor_number(sings))
    logger.info("Euler characteristic residual on %s: %s", ci, residual)
    return residual
