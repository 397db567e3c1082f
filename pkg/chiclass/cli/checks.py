"""
The verification suites run by "chiclass verify".  Each check returns
(cases, failures) where failures is a list of human readable labels.
"""

import itertools
import logging

from chiclass.algebra import Y, NotPolynomial, clear_denominator
from chiclass.classes import virtual_class_via_DR, virtual_class_via_Ty
from chiclass.genera import standard_series, verify_series_relation
from chiclass.geometry import complete_intersection
from chiclass.nearby import SncResolution, SncStratum, motivic_nearby_degree0
from chiclass.oracles import BlowupPoint, ContractCurve, Piece, chi_y_smooth_oracle, scissor_chi_y
from chiclass.singularity import (IsolatedSingularPoint, chi_y_milnor_fiber, spectrum_wh,
                                  verify_cor1_degree0, verify_cor2_degree0)

logger = logging.getLogger(__name__)


def complete_intersection_family(n_max, d_max, r_max=2):
    """
    every complete intersection in P^n, 1 <= n <= n_max, of r <= r_max
    hypersurfaces (r < n) with degrees in 1..d_max, degree lists sorted
    """
    family = []
    for n in range(1, n_max+1):
        for r in range(0, min(r_max, n-1) + 1):
            for degs in itertools.combinations_with_replacement(range(1, d_max+1), r):
                family.append(complete_intersection(n, list(degs)))
    return family


def check_prop14(n_max, d_max):
    """ the de Rham and T_y routes to the virtual class agree exactly """
    family = complete_intersection_family(n_max, d_max)
    failures = []
    for ci in family:
        try:
            if virtual_class_via_DR(ci) != virtual_class_via_Ty(ci):
                failures.append("{}: routes differ".format(ci))
        except NotPolynomial as err:
            failures.append("{}: {}".format(ci, err))
    logger.info("compared both virtual class routes on %d complete intersections", len(family))
    return len(family), failures


def check_ghrr(n_max, d_max):
    """ chi_y from the class agrees with the sheaf Euler characteristic oracle """
    family = complete_intersection_family(n_max, d_max)
    failures = []
    for ci in family:
        try:
            chi = clear_denominator(virtual_class_via_Ty(ci).degree_zero())
        except NotPolynomial as err:
            failures.append("{}: {}".format(ci, err))
            continue
        if chi != chi_y_smooth_oracle(ci):
            failures.append("{}: class gives {}, oracle gives {}".format(
                ci, chi.as_expr(), chi_y_smooth_oracle(ci).as_expr()))
    return len(family), failures


def check_series(order):
    failures = []
    for n in range(1, order+1):
        if not verify_series_relation(n).is_zero():
            failures.append("series relation fails at order {}".format(n))
    return order, failures


def check_specializations(order):
    ty = standard_series("Ty", order)
    failures = []
    for y0, kind in ((-1, "Chern"), (0, "Todd"), (1, "L")):
        if ty.specialize(y0) != standard_series(kind, order):
            failures.append("Ty at y = {} is not the {} series".format(y0, kind))
    return 3, failures


def node_resolution():
    """
    the blow-up of the origin for x^2 + y^2 + z^2: the strict transform
    (multiplicity 1) meets the exceptional P^2 (multiplicity 2) along a
    conic.  The double cover of P^2 minus the conic compactifies to a
    quadric P^1 x P^1 with boundary the preimage of the conic.
    """
    return SncResolution(
        [("strict", 1), ("exceptional", 2)],
        [SncStratum(["exceptional"], [(0, (1 - Y)**2), (1, 1 - Y)],
                    over_sigma=True, base_chi_y=Y**2),
         SncStratum(["strict", "exceptional"], [(0, 1 - Y)],
                    over_sigma=True, base_chi_y=1 - Y)],
        sigma_chi_y=1)


def nodal_cubic_surface():
    """ P^2 blown up at six points with a (-2)-curve contracted """
    return ContractCurve(BlowupPoint(Piece("P", 2), 6))


def check_cor2():
    """ the Milnor class formula on the one-nodal cubic surface, by three routes """
    ci = complete_intersection(3, [3])
    node = [IsolatedSingularPoint("node", weights=["1/2", "1/2", "1/2"])]
    chi_nodal = scissor_chi_y(nodal_cubic_surface())
    failures = []

    residual = verify_cor2_degree0(ci, node, chi_nodal)
    if not residual.is_zero:
        failures.append("Milnor class residual {}".format(residual.as_expr()))

    euler = chi_nodal.eval(-1)
    if verify_cor1_degree0(ci, node, euler) != 0:
        failures.append("Euler characteristic residual {}".format(
            verify_cor1_degree0(ci, node, euler)))

    _, phi = motivic_nearby_degree0(node_resolution())
    if phi != chi_y_milnor_fiber(spectrum_wh(["1/2", "1/2", "1/2"])):
        failures.append("nearby fiber gives {} for the node".format(phi.as_expr()))
    return 3, failures
