# unit tests for the sheaf Euler characteristic and scissor oracles
import pytest

from chiclass.algebra import Y, ypoly
from chiclass.classes import chi_y_virtual
from chiclass.geometry import complete_intersection
from chiclass.oracles import (BlowupPoint, Complement, ContractCurve, DisjointUnion, Piece,
                              Product, SheafEulerTable, chi_line_bundle_pn, chi_omega_pn,
                              chi_y_smooth_oracle, scissor_chi_y, sheaf_euler_omega)


class TestSheafEuler(object):

    def setup_method(self):
        """ this is run before each test """
        self.k3 = complete_intersection(3, [4])
        self.quintic = complete_intersection(4, [5])

    def test_line_bundles(self):
        assert chi_line_bundle_pn(2, 1) == 3
        assert chi_line_bundle_pn(3, 2) == 10
        assert chi_line_bundle_pn(2, -1) == 0
        # Serre duality with K = O(-3)
        assert chi_line_bundle_pn(2, -3) == 1

    def test_projective_space(self):
        for n in range(1, 6):
            for p in range(n+1):
                assert chi_omega_pn(n, p, 0) == (-1)**p
        assert chi_omega_pn(2, 3, 0) == 0
        # T P^2 = Omega^1(3) has chi 8
        assert chi_omega_pn(2, 1, 3) == 8

    def test_k3(self):
        assert sheaf_euler_omega(self.k3, 0) == 2
        assert sheaf_euler_omega(self.k3, 1) == -20
        assert sheaf_euler_omega(self.k3, 2) == 2

    def test_quintic(self):
        assert [sheaf_euler_omega(self.quintic, p) for p in range(4)] == [0, 100, -100, 0]
        assert chi_y_smooth_oracle(self.quintic) == ypoly(100*Y - 100*Y**2)

    def test_serre_symmetry(self):
        for ci in (complete_intersection(4, [2, 2]), complete_intersection(5, [3]),
                   complete_intersection(4, [4])):
            d = ci.dim
            for p in range(d + 1):
                assert sheaf_euler_omega(ci, p) == (-1)**d * sheaf_euler_omega(ci, d - p)

    def test_agrees_with_classes(self):
        for ci in (complete_intersection(2, [4]), complete_intersection(3, [2, 3]),
                   complete_intersection(4, [3]), complete_intersection([1, 1], [[2, 2]]),
                   complete_intersection([1, 2], [[2, 3]])):
            assert chi_y_smooth_oracle(ci) == chi_y_virtual(ci), ci.label

    def test_memo(self):
        table = SheafEulerTable(self.k3.ambient, self.k3.multidegrees)
        assert table.chi(1, 0, (0,)) == 2
        assert table.chi(1, 0, (0,)) == 2
        assert table.chi(0, -1, (0,)) == 0

    def test_range(self):
        with pytest.raises(ValueError):
            sheaf_euler_omega(self.k3, 3)


class TestScissor(object):

    def setup_method(self):
        """ this is run before each test """
        self.p1 = Piece("P", 1)
        self.p2 = Piece("P", 2)

    def test_pieces(self):
        assert scissor_chi_y(self.p2 - self.p1) == ypoly(Y**2)
        assert scissor_chi_y(Piece("A", 2) + Piece("A", 1) + Piece("point")) == \
            scissor_chi_y(self.p2)
        assert scissor_chi_y(self.p1 * self.p1) == ypoly((1 - Y)**2)
        assert scissor_chi_y(Product(Piece("Cstar", 1), Piece("A", 1))) == ypoly(Y + Y**2)

    def test_cubic_surfaces(self):
        smooth = BlowupPoint(self.p2, 6)
        assert scissor_chi_y(smooth) == chi_y_virtual(complete_intersection(3, [3]))
        assert scissor_chi_y(ContractCurve(smooth)) == ypoly(1 - 6*Y + Y**2)

    def test_blowup(self):
        # one point of P^3 becomes a P^2
        assert scissor_chi_y(BlowupPoint(Piece("P", 3))) == ypoly(1 - 2*Y + 2*Y**2 - Y**3)
        assert scissor_chi_y(BlowupPoint(self.p1)) == scissor_chi_y(self.p1)

    def test_dimension(self):
        assert DisjointUnion(self.p1, self.p2).dim == 2
        assert (self.p1 * self.p2).dim == 3
        assert Complement(self.p2, Piece("point")).dim == 2

    def test_errors(self):
        with pytest.raises(ValueError):
            Complement(self.p1, self.p2)
        with pytest.raises(ValueError):
            BlowupPoint(Piece("point"))
        with pytest.raises(ValueError):
            ContractCurve(self.p2, -1)
        with pytest.raises(ValueError):
            DisjointUnion()
        with pytest.raises(TypeError):
            scissor_chi_y(3)

    def test_repr(self):
        assert repr(ContractCurve(BlowupPoint(self.p2, 6))) == "Contract_1(Bl_6(P2))"
        assert repr(self.p2 - Piece("point")) == "(P2 - point)"
