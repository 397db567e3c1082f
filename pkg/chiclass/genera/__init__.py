"""Genus power series and multiplicative sequences.

standard_series builds the Hirzebruch series Q_y and Q~_y together with
the Todd, Chern and L series; multiplicative_class evaluates the
multiplicative sequence of a series on a virtual bundle through the
splitting principle, and chern_character / lambda_y_character give the
Chern character of E and of Lambda_y E^*.
"""

from .series import (KINDS, GenusSeries, standard_series, lambda_y_series,
                     verify_series_relation)
from .multiplicative import multiplicative_class, chern_character, lambda_y_character
