"""Genus-level calculus of nearby and vanishing cycles.

* strat_additivity: additivity of chi_y over a stratification

* SncResolution, motivic_nearby_degree0: the motivic nearby fiber from
  the data of an embedded resolution with normal crossings

* incl_excl_open: chi_y of an open stratum from a compactification

* LogPair, log_dr_trivial: the logarithmic de Rham route for the
  constant variation on the complement of an SNC divisor

* pieces: chi^c_y of affine spaces, tori and projective spaces
"""

from .pieces import PIECE_KINDS, affine, projective, torus, point, standard_piece
from .strata import StratumGenus, strat_additivity
from .snc import (incl_excl_open, stalk_multiplicities, stratum_weight,
                  SncStratum, SncResolution, motivic_nearby_degree0,
                  acampo_euler, check_cover_degrees)
from .logforms import LogPair, log_dr_trivial
