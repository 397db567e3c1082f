"""
Compactly supported chi_y of the standard pieces: affine spaces, tori,
projective spaces and the point.  H^{2k}_c(A^k) is Tate of weight k, so
chi^c_y(A^k) = (-y)^k and everything else follows by additivity.
"""

from chiclass.algebra import Y, ypoly

PIECE_KINDS = ("point", "A", "P", "Cstar")


def affine(k):
    if k < 0:
        raise ValueError("affine space of negative dimension {}".format(k))
    return ypoly((-Y)**k)


def projective(n):
    """ P^n = A^0 + A^1 + ... + A^n """
    if n < 0:
        raise ValueError("projective space of negative dimension {}".format(n))
    return ypoly(sum((-Y)**k for k in range(n+1)))


def torus(k=1):
    """ (C^*)^k, with C^* = A^1 minus a point """
    if k < 0:
        raise ValueError("torus of negative dimension {}".format(k))
    return ypoly((-Y - 1)**k)


def point():
    return ypoly(1)


def standard_piece(kind, dim=0):
    """ chi^c_y of the piece named kind ("point", "A", "P" or "Cstar") of dimension dim """
    if kind == "point":
        if dim != 0:
            raise ValueError("a point has dimension 0, not {}".format(dim))
        return point()
    if kind == "A":
        return affine(dim)
    if kind == "P":
        return projective(dim)
    if kind == "Cstar":
        return torus(dim)
    raise ValueError("unknown piece {!r}, expected one of {}".format(kind, PIECE_KINDS))
