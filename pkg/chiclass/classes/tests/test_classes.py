# unit tests for Hirzebruch classes of complete intersections
import pytest
from sympy import Rational

from chiclass.algebra import Y, NormCoeff, NotPolynomial, ypoly
from chiclass.classes import (HomologyClass, chi_y_virtual, clear_denominators, dr_character,
                              hirzebruch_class_smooth, normalize_1py, specialize,
                              tate_twist, td_1py_star, virtual_class_of_locus,
                              virtual_class_via_DR, virtual_class_via_Ty)
from chiclass.geometry import complete_intersection, degree, projective_ring


class TestHomologyClass(object):
    @classmethod
    def setup_class(cls):
        """ this is run once for each class before any tests """
        pass

    @classmethod
    def teardown_class(cls):
        """ this is run once for each class after all tests """
        pass

    def setup_method(self):
        """ this is run before each test """
        self.p1 = projective_ring(1)
        self.h = self.p1.hyperplane()
        self.c = HomologyClass(self.p1.one() * 2 + self.h * (1 - Y), 1)

    def teardown_method(self):
        """ this is run after each test """
        self.c = None

    def test_parts(self):
        assert self.c.part(1) == self.p1.one() * 2
        assert self.c.part(0) == self.h * (1 - Y)
        assert self.c.chi_y() == ypoly(1 - Y)
        assert self.c.ambient_degree(0) == 1

    def test_codimension(self):
        p2 = projective_ring(2)
        with pytest.raises(ValueError):
            HomologyClass(p2.one(), 1)
        with pytest.raises(TypeError):
            HomologyClass(ypoly(1), 1)

    def test_normalize(self):
        c = normalize_1py(self.c)
        assert c.part(1) == self.p1.one() * NormCoeff(2, 1)
        assert c.part(0) == self.c.part(0)
        assert not c.is_polynomial()
        with pytest.raises(NotPolynomial):
            clear_denominators(c)

    def test_specialize(self):
        s = specialize(self.c, -1)
        assert s.degree_zero() == 2
        assert specialize(self.c, 1).degree_zero() == 0
        with pytest.raises(ValueError):
            specialize(self.c, 2)

    def test_tate_twist(self):
        assert tate_twist(self.c, 0) == self.c
        t = tate_twist(self.c, -1)
        assert t.chi_y() == ypoly(-Y + Y**2)
        assert tate_twist(self.c, -2).chi_y() == ypoly(Y**2 - Y**3)
        with pytest.raises(ValueError):
            tate_twist(self.c, 1)

    def test_arithmetic(self):
        assert (self.c - self.c).degree_zero() == 0
        assert (self.c * 3).chi_y() == ypoly(3 - 3*Y)
        assert (self.c + self.c) == self.c * 2


class TestSmoothClasses(object):

    def test_surfaces(self):
        assert chi_y_virtual(complete_intersection(3, [4])) == ypoly(2 - 20*Y + 2*Y**2)
        assert chi_y_virtual(complete_intersection(3, [3])) == ypoly(1 - 7*Y + Y**2)
        assert chi_y_virtual(complete_intersection(3, [2])) == ypoly(1 - 2*Y + Y**2)
        assert chi_y_virtual(complete_intersection(2, [])) == ypoly(1 - Y + Y**2)

    def test_threefolds(self):
        assert chi_y_virtual(complete_intersection(4, [5])) == ypoly(100*Y - 100*Y**2)
        assert chi_y_virtual(complete_intersection(5, [2, 4])) == ypoly(88*Y - 88*Y**2)

    def test_curves(self):
        assert chi_y_virtual(complete_intersection(2, [1])) == ypoly(1 - Y)
        assert chi_y_virtual(complete_intersection(2, [3])) == ypoly(0)
        # genus 3
        assert chi_y_virtual(complete_intersection(2, [4])) == ypoly(-2 + 2*Y)

    def test_full_class_p1(self):
        p1 = projective_ring(1)
        c = hirzebruch_class_smooth(complete_intersection(1, []))
        assert c.part(1) == p1.one()
        assert c.part(0) == p1.hyperplane() * (1 - Y)

    def test_specializations_p2(self):
        c = hirzebruch_class_smooth(complete_intersection(2, []))
        p2 = projective_ring(2)
        h = p2.hyperplane()
        chern = specialize(c, -1)
        assert chern.underlying == p2.one() + h * 3 + h**2 * 3
        todd = specialize(c, 0)
        assert todd.underlying == p2.one() + h * Rational(3, 2) + h**2
        assert specialize(c, 1).degree_zero() == 1

    def test_kunneth(self):
        c = hirzebruch_class_smooth(complete_intersection([1, 1], []))
        assert c.chi_y() == ypoly((1 - Y)**2)
        c = hirzebruch_class_smooth(complete_intersection([1, 2], []))
        assert c.chi_y() == ypoly((1 - Y) * (1 - Y + Y**2))


class TestVirtualRoutes(object):

    def setup_method(self):
        """ this is run before each test """
        self.family = [complete_intersection(2, [3]),
                       complete_intersection(3, [4]),
                       complete_intersection(3, [2, 2]),
                       complete_intersection(4, [3]),
                       complete_intersection([1, 1], [[2, 2]]),
                       complete_intersection([1, 2], [[1, 2]])]

    def test_routes_agree(self):
        for ci in self.family:
            via_dr = virtual_class_via_DR(ci)
            via_ty = virtual_class_via_Ty(ci)
            assert via_dr == via_ty, ci.label
            assert via_dr.is_polynomial()

    def test_zero_dimensional_locus(self):
        # two points of P1
        c = virtual_class_of_locus(projective_ring(1), [(2,)])
        assert c.dim_x == 0
        assert c.chi_y() == ypoly(2)
        # four points of P2
        c = virtual_class_of_locus(projective_ring(2), [(2,), (2,)])
        assert degree(c.underlying) == 4

    def test_euler_specialization(self):
        ci = complete_intersection(3, [4])
        e = specialize(virtual_class_via_DR(ci), -1).degree_zero()
        assert e == 24

    def test_tate_twist_compatibility(self):
        # twisting the de Rham input by (-y)^{-k} twists the class
        for ci in self.family[:4]:
            dr = dr_character(ci.ambient, ci.multidegrees)
            c = td_1py_star(ci, dr)
            assert clear_denominators(c) == virtual_class_via_Ty(ci)
            for k in (0, -1, -2):
                twisted = td_1py_star(ci, dr * ypoly((-Y)**(-k)))
                assert twisted == tate_twist(c, k)
            assert td_1py_star(ci, dr * ypoly(Y)).chi_y() == -tate_twist(c, -1).chi_y()
