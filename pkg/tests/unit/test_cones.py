import unittest

from tools.cones import (
    cone_report,
    in_birational_kahler_closure,
    in_nef_x,
    in_nef_xprime,
    in_positive_cone_closure,
    is_nef,
    on_flop_wall,
)
from tools.lattice import hl_pair, hl_square
from util.models import HLClass

H_PLUS_L = HLClass(a=1, b=1)
BOX = range(-100, 101)


class TestConeReport(unittest.TestCase):

    def test_h(self):
        report = cone_report(HLClass(a=1, b=0))
        self.assertTrue(report.in_nef_X)
        self.assertFalse(report.in_nef_Xprime)
        self.assertTrue(report.in_birational_kahler_closure)

    def test_l(self):
        report = cone_report(HLClass(a=0, b=1))
        self.assertTrue(report.in_nef_Xprime)
        self.assertFalse(report.in_nef_X)
        self.assertFalse(report.is_big)

    def test_wall_ray(self):
        c = HLClass(a=1, b=2)
        report = cone_report(c)
        self.assertTrue(report.in_nef_X)
        self.assertTrue(report.in_nef_Xprime)
        self.assertTrue(report.on_flop_wall)
        self.assertTrue(report.is_big)
        self.assertEqual(hl_square(c), 10)

    def test_h_plus_delta_on_positive_cone_boundary(self):
        c = HLClass(a=2, b=-1)
        report = cone_report(c)
        self.assertEqual(hl_square(c), 0)
        self.assertTrue(report.in_positive_cone_closure)
        self.assertFalse(report.in_birational_kahler_closure)
        self.assertFalse(report.is_big)

    def test_zero_class_lies_in_every_closure(self):
        report = cone_report(HLClass(a=0, b=0))
        self.assertTrue(report.in_nef_X and report.in_nef_Xprime)
        self.assertTrue(report.in_positive_cone_closure)
        self.assertFalse(report.on_flop_wall)

    def test_is_nef_dispatches_on_model(self):
        c = HLClass(a=0, b=1)
        self.assertFalse(is_nef(c, "x"))
        self.assertTrue(is_nef(c, "xprime"))


def test_nesting_on_box():
    for a in BOX:
        for b in BOX:
            c = HLClass(a=a, b=b)
            for nef in (in_nef_x(c), in_nef_xprime(c)):
                if nef:
                    assert in_birational_kahler_closure(c)
            if in_birational_kahler_closure(c):
                assert in_positive_cone_closure(c)


def test_nef_cones_meet_in_wall_ray():
    for a in BOX:
        for b in BOX:
            c = HLClass(a=a, b=b)
            both = in_nef_x(c) and in_nef_xprime(c) and not c.is_zero
            assert both == (a > 0 and b == 2 * a)
            assert on_flop_wall(c) == both


def test_positive_cone_tie_break():
    for a in BOX:
        for b in BOX:
            c = HLClass(a=a, b=b)
            if hl_square(c) == 0 and hl_pair(c, H_PLUS_L) == 0:
                assert c.is_zero


def test_bigness_on_nef_cones():
    for a in BOX:
        for b in BOX:
            c = HLClass(a=a, b=b)
            if in_nef_x(c) and not c.is_zero:
                assert hl_square(c) > 0
            if in_nef_xprime(c):
                assert (hl_square(c) == 0) == (a == 0)
