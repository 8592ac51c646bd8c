import logging
from math import gcd
from typing import Tuple

from constants import GENUS_TWO_HALF_SQUARE, GENUS_TWO_N, WALL_CLASS_HL
from util.exceptions import MismatchedAmbientError, RankUnsupportedError, ZeroClassError
from util.models import GeneralClass, GramLattice, HLClass

# Configure logging
logger = logging.getLogger("k3.baselocus")


def delta_square(n: int) -> int:
    """q(delta) = -2(n-1) on a variety of K3^[n]-type"""
    return -2 * (n - 1)


def bbf_square(c: GeneralClass) -> int:
    """Beauville-Bogomolov-Fujiki square q(a*lambda + b*delta) = 2*d0*a^2 - 2(n-1)*b^2"""
    return 2 * c.d0 * c.a * c.a + delta_square(c.n) * c.b * c.b


def bbf_pair(c1: GeneralClass, c2: GeneralClass) -> int:
    """Associated bilinear form; lambda and delta are orthogonal

    Raises:
        MismatchedAmbientError: If the classes live over different n or different lambda lines
    """
    if c1.n != c2.n:
        raise MismatchedAmbientError(
            f"cannot pair classes with n={c1.n} and n={c2.n}",
            {"field": "n"}
        )
    if c1.lambda_tag != c2.lambda_tag or c1.d0 != c2.d0:
        raise MismatchedAmbientError(
            f"cannot pair classes over lambda lines {c1.lambda_tag!r} and {c2.lambda_tag!r}",
            {"field": "lambda_tag"}
        )
    return 2 * c1.d0 * c1.a * c2.a + delta_square(c1.n) * c1.b * c2.b


def divisibility(c: GeneralClass) -> int:
    """div(a*lambda + b*delta) = gcd(a, 2b(n-1)), using that the K3 lattice is unimodular"""
    if c.is_zero:
        raise ZeroClassError("divisibility")
    return gcd(c.a, 2 * c.b * (c.n - 1))


def is_primitive(c: GeneralClass) -> bool:
    if c.is_zero:
        raise ZeroClassError("is_primitive")
    return gcd(c.a, c.b) == 1


def discriminant(g: GramLattice) -> int:
    if g.rank > 2:
        raise RankUnsupportedError(g.rank)
    if g.rank == 1:
        return g.gram[0][0]
    (p, q), (r, s) = g.gram
    return p * s - q * r


def k3n_discriminant(n: int) -> int:
    """Discriminant of the K3^[n] lattice; the K3 lattice itself is unimodular"""
    return 2 * (n - 1)


def hl_to_hdelta(c: HLClass) -> Tuple[int, int]:
    """a*H + b*L = (a+b)*H - b*delta"""
    return (c.a + c.b, -c.b)


def hdelta_to_hl(a: int, b: int, model: str = "x") -> HLClass:
    return HLClass(a=a + b, b=-b, model=model)


def hl_as_general(c: HLClass) -> GeneralClass:
    """The genus-2 class as a formal class over lambda = H, with d0 = 1 and n = 2"""
    a, b = hl_to_hdelta(c)
    return GeneralClass(a=a, b=b, d0=GENUS_TWO_HALF_SQUARE, n=GENUS_TWO_N, lambda_tag="H")


def hl_square(c: HLClass) -> int:
    return bbf_square(hl_as_general(c))


def hl_pair(c1: HLClass, c2: HLClass) -> int:
    return bbf_pair(hl_as_general(c1), hl_as_general(c2))


def genus_two_lattice() -> GramLattice:
    """Pic(X) of the genus-2 example in the (H, L) basis"""
    h, l = HLClass(a=1, b=0), HLClass(a=0, b=1)
    gram = ((hl_pair(h, h), hl_pair(h, l)), (hl_pair(l, h), hl_pair(l, l)))
    return GramLattice(rank=2, gram=gram)


WALL_CLASS = HLClass(a=WALL_CLASS_HL[0], b=WALL_CLASS_HL[1])
WALL_CLASS_PRIME = WALL_CLASS.on("xprime")
