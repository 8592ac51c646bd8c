"""
Cone membership in the rational Picard plane of the genus-2 example.

All cones are closed rational slices, tested by exact inequalities in (H, L)
coordinates:

    Nef(X)   = <H, H+2L>        b >= 0 and 2a >= b
    Nef(X')  = <H'+2L', L'>     a >= 0 and b >= 2a
    birK     = <H, L>           a >= 0 and b >= 0
    positive q >= 0 and (c, H+L) >= 0

H+2L = 3H-2delta spans the wall between the two nef cones; W = 2H-3delta is
orthogonal to it.
"""
import logging

from constants import FLOP_WALL_RAY, H_PLUS_L_COORDS
from tools.lattice import hl_pair, hl_square
from util.models import ConeReport, HLClass

# Configure logging
logger = logging.getLogger("k3.baselocus")

_H_PLUS_L = HLClass(a=H_PLUS_L_COORDS[0], b=H_PLUS_L_COORDS[1])


def in_nef_x(c: HLClass) -> bool:
    return c.b >= 0 and 2 * c.a >= c.b


def in_nef_xprime(c: HLClass) -> bool:
    return c.a >= 0 and c.b >= 2 * c.a


def is_nef(c: HLClass, model: str) -> bool:
    """Nef on the given model; X and X' share coordinates via the birational transform"""
    return in_nef_x(c) if model == "x" else in_nef_xprime(c)


def in_birational_kahler_closure(c: HLClass) -> bool:
    return c.a >= 0 and c.b >= 0


def in_positive_cone_closure(c: HLClass) -> bool:
    # (H+L)^perp is negative definite, so q = 0 and (c, H+L) = 0 only for c = 0
    return hl_square(c) >= 0 and hl_pair(c, _H_PLUS_L) >= 0


def on_flop_wall(c: HLClass) -> bool:
    """c is a positive multiple of H+2L"""
    wall_a, wall_b = FLOP_WALL_RAY
    return not c.is_zero and c.a >= 0 and c.a * wall_b == c.b * wall_a


def cone_report(c: HLClass) -> ConeReport:
    report = ConeReport(
        in_positive_cone_closure=in_positive_cone_closure(c),
        in_birational_kahler_closure=in_birational_kahler_closure(c),
        in_nef_X=in_nef_x(c),
        in_nef_Xprime=in_nef_xprime(c),
        on_flop_wall=on_flop_wall(c),
        is_big=hl_square(c) > 0,
    )
    logger.debug(f"cone_report({c.a}, {c.b}) big={report.is_big}")
    return report
