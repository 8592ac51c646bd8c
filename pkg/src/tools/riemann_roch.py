import logging

from constants import GENUS_TWO_N
from tools.cones import is_nef
from tools.lattice import hl_as_general, hl_square, is_primitive
from util.exceptions import NotNefError, OddSquareError
from util.models import HLClass, Justification, SectionCount

# Configure logging
logger = logging.getLogger("k3.baselocus")


def binomial(top: int, k: int) -> int:
    """Polynomial binomial coefficient top*(top-1)*...*(top-k+1)/k! for any integer top

    Agrees with math.comb for top >= 0 and vanishes for 0 <= top < k.
    """
    result = 1
    for i in range(k):
        # result is C(top, i) here, so the division is exact
        result = result * (top - i) // (i + 1)
    return result


def euler_characteristic(q_value: int, n: int) -> int:
    """chi(X, L) = C(q(L)/2 + n + 1, n) on a variety of K3^[n]-type

    Raises:
        OddSquareError: If q_value is odd
    """
    if q_value % 2 != 0:
        raise OddSquareError(q_value)
    return binomial(q_value // 2 + n + 1, n)


def section_count(c: HLClass, model: str) -> SectionCount:
    """h0 of a nef class of the genus-2 example, where it is determined

    Big and nef: Kodaira vanishing gives h0 = chi.
    Primitive isotropic and nef on X': the Lagrangian fibration gives h0 = n + 1.

    Raises:
        NotNefError: If c is not nef on the given model
    """
    if not is_nef(c, model):
        logger.warning(f"section_count called on non-nef class {c.coords} on {model}")
        raise NotNefError(c.coords, model)

    q_value = hl_square(c)
    chi = euler_characteristic(q_value, GENUS_TWO_N)
    if q_value > 0:
        return SectionCount(chi=chi, h0=chi, justification=Justification.KODAIRA_BIG_NEF)
    if q_value == 0 and not c.is_zero and model == "xprime" and is_primitive(hl_as_general(c)):
        return SectionCount(chi=chi, h0=GENUS_TWO_N + 1, justification=Justification.LAGRANGIAN_PRIMITIVE)
    return SectionCount(chi=chi, justification=Justification.NOT_DETERMINED)
