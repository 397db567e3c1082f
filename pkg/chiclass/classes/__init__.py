"""Hirzebruch classes of complete intersections.

A HomologyClass is a class on X represented in the ambient cohomology
ring.  hirzebruch_class_smooth, virtual_class_via_DR and
virtual_class_via_Ty compute T_y* of a smooth member and the two
constructions of the virtual class; normalize_1py, specialize and
tate_twist act on the results.
"""

from .homology import (HomologyClass, normalize_1py, clear_denominators,
                       specialize, tate_twist)
from .hirzebruch import (dr_character, td_1py_star_locus, td_1py_star,
                         virtual_class_of_locus, virtual_class_via_DR,
                         virtual_class_via_Ty, hirzebruch_class_smooth,
                         chi_y_virtual)
