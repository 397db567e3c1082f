"""
Genus-level additivity over a stratification: every stratum contributes
its compactly supported chi_y weighted by the chi_y of the stalk data of
the complex on that stratum.
"""

from chiclass.algebra import ZERO_POLY, ONE_POLY, ypoly


class StratumGenus(object):
    """ a stratum S with chi^c_y(S) and the chi_y of the local (stalk) data along S """

    def __init__(self, label, chi_c, local_factor=ONE_POLY):
        self.label = label
        self.chi_c = ypoly(chi_c)
        self.local_factor = ypoly(local_factor)

    def contribution(self):
        return self.chi_c * self.local_factor

    def __repr__(self):
        return "StratumGenus({!r}, chi_c={}, local={})".format(
            self.label, self.chi_c.as_expr(), self.local_factor.as_expr())


def strat_additivity(strata):
    """ sum over the strata of chi^c_y(S) * localFactor(S) """
    total = ZERO_POLY
    for s in strata:
        total = total + s.contribution()
    return total
