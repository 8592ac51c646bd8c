"""
Base loci of big and nef line bundles.

- classify: the genus-2 example, on X and on its Mukai flop X'
- mayer_search / fixed_divisor_search: numerical decompositions h = mE + C on
  rank <= 2 lattices (effectivity of E and C is never checked)
- moduli_nonempty / generic_bpf: verdicts for the moduli of pairs (X, A) with
  q(A) = 2d and div(A) = m on K3^[2]-type
"""
import logging
from itertools import product
from typing import Callable, List, Tuple

from constants import GENUS_TWO_N, H_PLUS_L_COORDS, L_COORDS, MAX_GRAM_RANK, SUPPORTED_DIVISIBILITIES
from tools.cones import cone_report
from tools.flop import line_degree, negative_on_flopped_lines, vanishing_argument_applies
from tools.lattice import hl_as_general
from tools.sections import verify_multiplication_kernel
from util.citations import cite
from util.exceptions import (
    NonPositiveSquareError,
    NotBigError,
    RankUnsupportedError,
    UnsupportedDivisibilityError,
    VerificationFailedError,
)
from util.models import (
    BaseLocusReport,
    GeneralClass,
    GramLattice,
    HLClass,
    MayerDecomposition,
    ModuliVerdict,
    Verdict,
)
from util.reports import merge_citations

# Configure logging
logger = logging.getLogger("k3.baselocus")

Vector = Tuple[int, ...]


def classify(c: HLClass, model: str) -> BaseLocusReport:
    """Base locus verdict for a class of the genus-2 example

    Every Free verdict is backed by a successful replay of the vanishing argument,
    whose citations are carried over. On X the replay fails only at H+L, whose base
    locus is the flopped plane with its reduced structure.
    """
    report = cone_report(c)
    if c.is_zero:
        return BaseLocusReport(a=c.a, b=c.b, model=model, verdict=Verdict.ZERO_CLASS, big=False)
    nef = report.in_nef_X if model == "x" else report.in_nef_Xprime
    if not nef:
        return BaseLocusReport(a=c.a, b=c.b, model=model, verdict=Verdict.NOT_NEF, big=report.is_big)

    applies, trace = vanishing_argument_applies(c, model)
    citations = [step.citation for step in trace]
    if applies:
        summary = "all_nef_xprime_free" if model == "xprime" else "all_nef_x_except_h_plus_l_free"
        return BaseLocusReport(a=c.a, b=c.b, model=model, verdict=Verdict.FREE, big=report.is_big,
                               citations=merge_citations(citations + [cite(summary)]))

    if model != "x" or c.coords != H_PLUS_L_COORDS:
        raise VerificationFailedError(f"vanishing argument fails for nef class {c.coords} on {model}")

    # Sections of H+L: H0(L) * H0(H) fills all of H0(H+L) and every section of L vanishes on the plane
    sections = verify_multiplication_kernel()
    l_class = HLClass(a=L_COORDS[0], b=L_COORDS[1])
    if not (sections.surjective and negative_on_flopped_lines(l_class) and line_degree(l_class) == -1):
        raise VerificationFailedError("base locus of H+L is not the flopped plane")
    citations += [cite("h_plus_l_base_locus"), cite("reduced_structure"), cite("line_degree_formula"),
                  cite("l_negative_on_lines"), cite("mu_surjective")]
    return BaseLocusReport(a=c.a, b=c.b, model=model, verdict=Verdict.PLANE_P2_REDUCED, big=report.is_big,
                           citations=merge_citations(citations))


def sweep_verdicts(max_coeff: int, model: str) -> List[BaseLocusReport]:
    """classify over 0 <= a, b <= max_coeff, a-major"""
    return [classify(HLClass(a=a, b=b, model=model), model)
            for a, b in product(range(max_coeff + 1), repeat=2)]


def _decomposition_search(g: GramLattice, h: Vector, coeff_bound: int, nonnegative: bool,
                          residual_ok: Callable[[int], bool]) -> List[MayerDecomposition]:
    """All h = m*E + C with q(E) = 0, (E, C) = 1 and residual_ok(q(C))

    E ranges over [-coeff_bound, coeff_bound]^rank and m over [2, coeff_bound].
    """
    if g.rank > MAX_GRAM_RANK:
        raise RankUnsupportedError(g.rank)
    q_h = g.square(h)
    if q_h <= 0:
        raise NotBigError(q_h)

    found = []
    for e in product(range(-coeff_bound, coeff_bound + 1), repeat=g.rank):
        # (E, C) = (E, h) - m*q(E), so both conditions only involve E
        if g.square(e) != 0 or g.pair(e, h) != 1:
            continue
        for m in range(2, coeff_bound + 1):
            residual = tuple(hi - m * ei for hi, ei in zip(h, e))
            if nonnegative and (min(e) < 0 or min(residual) < 0):
                continue
            if residual_ok(g.square(residual)) and g.pair(e, residual) == 1:
                found.append(MayerDecomposition(m=m, E=e, C=residual))
    found.sort(key=lambda d: (d.m, d.E))
    logger.debug(f"decomposition search on {g.gram} for h={h}: {len(found)} candidates")
    return found


def mayer_search(g: GramLattice, h: Vector, coeff_bound: int, nonnegative: bool = False) -> List[MayerDecomposition]:
    """Numerical Mayer decompositions h = mE + C with q(E) = 0, q(C) = -2 and (E, C) = 1

    Candidates only: whether E is smooth elliptic and C smooth rational is not decided here.

    Raises:
        RankUnsupportedError: If the lattice has rank greater than 2
        NotBigError: If q(h) <= 0
    """
    return _decomposition_search(g, tuple(h), coeff_bound, nonnegative, lambda q: q == -2)


def fixed_divisor_search(g: GramLattice, h: Vector, coeff_bound: int,
                         nonnegative: bool = False) -> List[MayerDecomposition]:
    """Numerical candidates h = mE + F with q(E) = 0, q(F) < 0 and (E, F) = 1

    Raises:
        RankUnsupportedError: If the lattice has rank greater than 2
        NotBigError: If q(h) <= 0
    """
    return _decomposition_search(g, tuple(h), coeff_bound, nonnegative, lambda q: q < 0)


def moduli_nonempty(d: int, m: int) -> ModuliVerdict:
    """Whether some primitive class on K3^[2]-type has q = 2d and div = m, with a witness

    Raises:
        NonPositiveSquareError: If d <= 0
        UnsupportedDivisibilityError: If m is not 1 or 2
    """
    if d <= 0:
        raise NonPositiveSquareError(d)
    if m not in SUPPORTED_DIVISIBILITIES:
        raise UnsupportedDivisibilityError(m)

    if m == 1:
        witness = GeneralClass(a=1, b=0, d0=d, n=GENUS_TWO_N)
        return ModuliVerdict(d=d, m=m, nonempty=True, witness=witness,
                             citations=[cite("div_divides_discriminant"), cite("moduli_div_one")])

    citations = [cite("div_divides_discriminant"), cite("moduli_div_two")]
    # q(2k*H - (2k-1)*delta) = 8k^2 - 2(2k-1)^2 = 2(4k-1) and div = 2, so d = 4k - 1
    if d % 4 != 3:
        return ModuliVerdict(d=d, m=m, nonempty=False, citations=citations)
    k = (d + 1) // 4
    witness_hl = HLClass(a=1, b=2 * k - 1)
    return ModuliVerdict(d=d, m=m, nonempty=True, witness=hl_as_general(witness_hl),
                         witness_hl=witness_hl, citations=citations)


def generic_bpf(d: int, m: int) -> ModuliVerdict:
    """moduli_nonempty plus whether A is base point free for a generic pair (X, A)

    (3, 2) is the one case the general argument misses; it is settled by the
    deformation to H+L on the genus-2 example.
    """
    verdict = moduli_nonempty(d, m)
    if not verdict.nonempty:
        return verdict
    if (d, m) == (3, 2):
        extra = [cite("generic_bpf_h_plus_l"), cite("multiple_bpf_3_2")]
    else:
        extra = [cite("generic_bpf_general")]
    return verdict.model_copy(update={"generic_bpf": True, "citations": verdict.citations + extra})
