"""
A calculator for compactly supported chi_y by cut and paste.  An
expression is a tree over the standard pieces; the geometric claims it
encodes (that B is closed in A, that the curve contracted is a smooth
rational curve) are the author's responsibility.
"""

from chiclass.algebra import ONE_POLY, Y, ypoly
from chiclass.nearby.pieces import projective, standard_piece


class ScissorExpr(object):
    """ base class: every node knows its dimension and its chi^c_y """

    dim = 0

    def chi_c(self):
        raise NotImplementedError()

    def __add__(self, other):
        return DisjointUnion(self, other)

    def __sub__(self, other):
        return Complement(self, other)

    def __mul__(self, other):
        return Product(self, other)


class Piece(ScissorExpr):
    """ a standard piece: "point", "A" (affine space), "P" (projective space) or "Cstar" (torus) """

    def __init__(self, kind, dim=0):
        self.kind = kind
        self.dim = dim
        self._chi = standard_piece(kind, dim)

    def chi_c(self):
        return self._chi

    def __repr__(self):
        return "{}{}".format(self.kind, self.dim) if self.kind != "point" else "point"


class DisjointUnion(ScissorExpr):

    def __init__(self, *parts):
        if not parts:
            raise ValueError("empty disjoint union")
        self.parts = parts
        self.dim = max(p.dim for p in parts)

    def chi_c(self):
        total = ypoly(0)
        for p in self.parts:
            total = total + p.chi_c()
        return total

    def __repr__(self):
        return "({})".format(" + ".join(repr(p) for p in self.parts))


class Complement(ScissorExpr):
    """ A minus the closed subset B """

    def __init__(self, a, b):
        if b.dim > a.dim:
            raise ValueError("cannot remove {} (dimension {}) from {} (dimension {})".format(
                b, b.dim, a, a.dim))
        self.a = a
        self.b = b
        self.dim = a.dim

    def chi_c(self):
        return self.a.chi_c() - self.b.chi_c()

    def __repr__(self):
        return "({!r} - {!r})".format(self.a, self.b)


class Product(ScissorExpr):

    def __init__(self, *factors):
        if not factors:
            raise ValueError("empty product")
        self.factors = factors
        self.dim = sum(f.dim for f in factors)

    def chi_c(self):
        total = ONE_POLY
        for f in self.factors:
            total = total * f.chi_c()
        return total

    def __repr__(self):
        return " x ".join(repr(f) for f in self.factors)


class BlowupPoint(ScissorExpr):
    """ the blow-up of x at `points` points: each point becomes a P^{dim-1} """

    def __init__(self, x, points=1):
        if x.dim < 1:
            raise ValueError("cannot blow up a point on {}, which has dimension {}".format(x, x.dim))
        if points < 0:
            raise ValueError("number of points must be non-negative, got {}".format(points))
        self.x = x
        self.points = points
        self.dim = x.dim

    def chi_c(self):
        return self.x.chi_c() + (projective(self.dim - 1) - ONE_POLY) * self.points

    def __repr__(self):
        return "Bl_{}({!r})".format(self.points, self.x)


class ContractCurve(ScissorExpr):
    """ x with `curves` disjoint smooth rational curves each contracted to a point """

    def __init__(self, x, curves=1):
        if x.dim < 1:
            raise ValueError("no curve to contract on {}, which has dimension {}".format(x, x.dim))
        if curves < 0:
            raise ValueError("number of curves must be non-negative, got {}".format(curves))
        self.x = x
        self.curves = curves
        self.dim = x.dim

    def chi_c(self):
        # replacing P^1 by a point adds 1 - (1 - y) = y
        return self.x.chi_c() + ypoly(Y) * self.curves

    def __repr__(self):
        return "Contract_{}({!r})".format(self.curves, self.x)


def scissor_chi_y(e):
    """ chi^c_y of the scissor expression e """
    if not isinstance(e, ScissorExpr):
        raise TypeError("expected a ScissorExpr, got {!r}".format(e))
    return e.chi_c()
