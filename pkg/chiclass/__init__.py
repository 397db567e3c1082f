"""chiclass is an exact calculator for Hirzebruch characteristic classes
of global complete intersections in products of projective spaces,
their virtual classes, Milnor class corrections from singularity
spectra and motivic nearby fiber genera.

There are several subpackages:

* algebra: exact coefficients, power series and truncated graded rings

* genera: genus power series and multiplicative sequences

* geometry: ambient rings, bundles and complete intersections

* classes: smooth and virtual Hirzebruch classes

* singularity: spectra and Milnor classes of isolated singularities

* nearby: genus-level nearby and vanishing cycle calculus

* oracles: independent cross-checks

* cli: the chiclass command line tool
"""

__version__ = "1.0.0"

from chiclass.algebra import NotPolynomial, NormCoeff, GradedClass, format_ypoly, parse_ypoly
from chiclass.geometry import (projective_ring, CompleteIntersection, complete_intersection,
                               degree)
from chiclass.classes import (virtual_class_via_DR, virtual_class_via_Ty,
                              hirzebruch_class_smooth)
