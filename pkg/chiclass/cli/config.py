"""
Runtime configuration of the command line tool.
"""

import os

MAX_DIM_VARIABLE = "CHICLASS_MAX_DIM"
DEFAULT_MAX_DIM = 8

DEFAULT_ORDER = 12
FORMATS = ("table", "json")


def max_dim():
    """ the largest ambient dimension a job may use, from CHICLASS_MAX_DIM (default 8) """
    value = os.environ.get(MAX_DIM_VARIABLE)
    if value is None or value.strip() == "":
        return DEFAULT_MAX_DIM
    try:
        n = int(value)
    except ValueError:
        raise ValueError("{} must be a positive integer, got {!r}".format(MAX_DIM_VARIABLE, value))
    if n < 1:
        raise ValueError("{} must be a positive integer, got {!r}".format(MAX_DIM_VARIABLE, value))
    return n
