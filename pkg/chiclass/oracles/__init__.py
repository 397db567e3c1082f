"""Independent oracles used to cross-check the class computations:

* sheaf_euler_omega / chi_y_smooth_oracle: chi(Omega^p_X) of a smooth
  complete intersection from binomial recursions

* scissor_chi_y: compactly supported chi_y of cut-and-paste expressions
  (Piece, DisjointUnion, Complement, Product, BlowupPoint, ContractCurve)
"""

from .sheaf_euler import (chi_line_bundle_pn, chi_omega_pn, SheafEulerTable,
                          sheaf_euler_omega, chi_y_smooth_oracle)
from .scissor import (ScissorExpr, Piece, DisjointUnion, Complement, Product,
                      BlowupPoint, ContractCurve, scissor_chi_y)
