"""Isolated hypersurface singularities: spectra of weighted homogeneous
singularities (spectrum_wh), Milnor numbers, chi_y of the Milnor fiber
cohomology, and the point-supported Milnor class of a complete
intersection together with the degree-zero checks that compare it with
the virtual class.
"""

from .spectrum import (as_rational, Weights, SpectrumData, spectrum_wh,
                       milnor_number, hodge_level, chi_y_milnor_fiber)
from .milnor import (IsolatedSingularPoint, milnor_class_isolated,
                     verify_cor2_degree0, hm_recursion_degree0,
                     total_milnor_number, verify_cor1_degree0)
