"""The ambient geometry: cohomology rings of products of projective
spaces, bundles and virtual bundles given by their Chern classes, and
complete intersections described by the multidegrees of their defining
sections.

The main classes are:

* RingDesc: the truncated ring Q[h_1, ..., h_m]/(h_i^{n_i+1})

* BundleDesc and KClass: bundles and formal differences of bundles

* CompleteIntersection: a complete intersection of r hypersurfaces
"""

from .ring import RingDesc, projective_ring, degree
from .bundles import (BundleDesc, KClass, newton_power_sums, line_bundle,
                      trivial_bundle, tangent_kclass, chern_classes)
from .complete_intersection import (CompleteIntersection, complete_intersection,
                                    intersection_class, normal_kclass,
                                    virtual_tangent_kclass, virtual_tangent,
                                    fundamental_class, top_chern_degree)
