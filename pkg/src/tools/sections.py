"""
Exact linear algebra of sections on P2 x P2.

Coordinates x0, x1, x2 on each factor; indices live in Z/3Z. Inside the nine
dimensional space H0(O(1,1)):

    s_i = x_{i+1} (x) x_{i+2} - x_{i+2} (x) x_{i+1}     spans V (sections of L)
    t_i = x_{i+1} (x) x_{i+2} + x_{i+2} (x) x_{i+1}
    v_i = x_i (x) x_i                                   t_i, v_i span W (sections of H)

Monomials of one factor are ordered graded-lexicographically (x0^2, x0x1, x0x2,
x1^2, x1x2, x2^2); monomial pairs are ordered with the first factor major.
"""
import hashlib
import logging
from functools import lru_cache
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Sequence, Tuple

from constants import DIM_V, DIM_W, EXPECTED_MU_KERNEL, GENUS_TWO_N, H_PLUS_L_COORDS
from tools.lattice import hl_square
from tools.riemann_roch import euler_characteristic
from util.citations import cite
from util.exceptions import BidegreeMismatchError, VerificationFailedError
from util.linalg import left_apply, matrix_rank, rank_and_kernel
from util.models import BidegreePoly, ExactMatrix, HLClass, KernelVerificationReport

# Configure logging
logger = logging.getLogger("k3.baselocus")

Exponent = Tuple[int, int, int]

__all__ = [
    "basis_V", "basis_W", "multiply", "mu_matrix", "rank_and_kernel",
    "verify_multiplication_kernel", "cross_product_identity_check",
]


def monomials(degree: int) -> List[Exponent]:
    """Exponent vectors of the given degree in x0, x1, x2, graded-lexicographic"""
    out = []
    for combo in combinations_with_replacement(range(3), degree):
        exponent = [0, 0, 0]
        for var in combo:
            exponent[var] += 1
        out.append(tuple(exponent))
    return out


def monomial_pairs(d1: int, d2: int) -> List[Tuple[Exponent, Exponent]]:
    return list(product(monomials(d1), monomials(d2)))


def _unit(i: int) -> Exponent:
    exponent = [0, 0, 0]
    exponent[i % 3] = 1
    return tuple(exponent)


def tensor(i: int, j: int, coeff=1) -> BidegreePoly:
    """coeff * x_i (x) x_j"""
    return BidegreePoly(bidegree=(1, 1), coefficients={(_unit(i), _unit(j)): Fraction(coeff)})


def basis_V() -> List[BidegreePoly]:
    return [tensor(i + 1, i + 2) + tensor(i + 2, i + 1, -1) for i in range(3)]


def basis_W() -> List[BidegreePoly]:
    t = [tensor(i + 1, i + 2) + tensor(i + 2, i + 1) for i in range(3)]
    v = [tensor(i, i) for i in range(3)]
    return t + v


def multiply(p: BidegreePoly, q: BidegreePoly) -> BidegreePoly:
    """(A (x) B)(C (x) D) = AC (x) BD, extended bilinearly; inputs must have bidegree (1,1)"""
    for poly in (p, q):
        if poly.bidegree != (1, 1):
            raise BidegreeMismatchError((1, 1), poly.bidegree)
    coefficients: Dict = {}
    for (a1, b1), c1 in p.coefficients.items():
        for (a2, b2), c2 in q.coefficients.items():
            key = (tuple(x + y for x, y in zip(a1, a2)), tuple(x + y for x, y in zip(b1, b2)))
            coefficients[key] = coefficients.get(key, Fraction(0)) + c1 * c2
    return BidegreePoly(bidegree=(2, 2), coefficients=coefficients)


def coefficient_vector(poly: BidegreePoly) -> List[Fraction]:
    return [poly.coefficients.get(key, Fraction(0)) for key in monomial_pairs(*poly.bidegree)]


def span_dimension(polys: Sequence[BidegreePoly]) -> int:
    if not polys:
        return 0
    rows = [coefficient_vector(p) for p in polys]
    return matrix_rank(ExactMatrix.from_rows(rows))


def restrict_to_diagonal(poly: BidegreePoly) -> Dict[Exponent, Fraction]:
    """Substitute the second-factor variables by the first-factor ones"""
    out: Dict[Exponent, Fraction] = {}
    for (alpha, beta), coeff in poly.coefficients.items():
        key = tuple(x + y for x, y in zip(alpha, beta))
        out[key] = out.get(key, Fraction(0)) + coeff
    return {key: coeff for key, coeff in out.items() if coeff != 0}


@lru_cache(maxsize=1)
def mu_matrix() -> ExactMatrix:
    """Matrix of V (x) W -> H0(O(2,2)); row 6*i + j holds the coefficients of s_i * w_j"""
    rows = [coefficient_vector(multiply(s, w)) for s in basis_V() for w in basis_W()]
    return ExactMatrix.from_rows(rows)


def matrix_digest(mat: ExactMatrix) -> str:
    """SHA-256 of one line per row, integer entries joined by commas"""
    lines = []
    for row in mat.entries:
        if any(x.denominator != 1 for x in row):
            raise ValueError("digest is defined for integer matrices only")
        lines.append(",".join(str(int(x)) for x in row))
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


def stated_kernel_vectors() -> List[List[Fraction]]:
    """s_{k+1} t_{k+2} + s_{k+2} t_{k+1} + 2 s_k v_k for k in Z/3Z, in the row basis of mu_matrix"""
    vectors = []
    for k in range(3):
        vector = [Fraction(0)] * (DIM_V * DIM_W)
        vector[DIM_W * ((k + 1) % 3) + (k + 2) % 3] += 1
        vector[DIM_W * ((k + 2) % 3) + (k + 1) % 3] += 1
        vector[DIM_W * k + 3 + k] += 2
        vectors.append(vector)
    return vectors


def _combine(vector: Sequence[Fraction]) -> BidegreePoly:
    total = BidegreePoly(bidegree=(2, 2))
    for (i, s), (j, w) in product(enumerate(basis_V()), enumerate(basis_W())):
        coeff = vector[DIM_W * i + j]
        if coeff:
            total = total + multiply(s, w).scaled(coeff)
    return total


@lru_cache(maxsize=1)
def verify_multiplication_kernel() -> KernelVerificationReport:
    """Check rank 15, a 3-dimensional kernel spanned by the three stated vectors,
    and surjectivity onto H0(X, H+L).

    Raises:
        VerificationFailedError: On the first sub-check that does not hold
    """
    mat = mu_matrix()
    rank, kernel = rank_and_kernel(mat)
    stated = stated_kernel_vectors()

    annihilated = [_combine(v).is_zero for v in stated]
    for k, ok in enumerate(annihilated):
        if not ok or any(left_apply(stated[k], mat)):
            raise VerificationFailedError(f"stated vector k={k} is not in the kernel")

    independent = matrix_rank(ExactMatrix.from_rows(stated)) == len(stated)
    if not independent:
        raise VerificationFailedError("stated vectors are linearly dependent")

    if len(kernel) != EXPECTED_MU_KERNEL:
        raise VerificationFailedError(f"kernel dimension is {len(kernel)}, expected {EXPECTED_MU_KERNEL}")
    spans = matrix_rank(ExactMatrix.from_rows(stated + [list(v) for v in kernel])) == len(kernel)
    if not spans:
        raise VerificationFailedError("stated vectors do not span the kernel")

    h_plus_l = HLClass(a=H_PLUS_L_COORDS[0], b=H_PLUS_L_COORDS[1])
    h0 = euler_characteristic(hl_square(h_plus_l), GENUS_TWO_N)
    surjective = rank == h0
    if not surjective:
        raise VerificationFailedError(f"image has dimension {rank}, h0(H+L) = {h0}")

    logger.info(f"multiplication map verified: rank {rank}, kernel {len(kernel)}")
    return KernelVerificationReport(
        source_dimension=mat.rows,
        target_dimension=mat.cols,
        rank=rank,
        kernel_dimension=len(kernel),
        stated_vectors_annihilated=annihilated,
        stated_vectors_independent=independent,
        stated_vectors_span_kernel=spans,
        h0_h_plus_l=h0,
        surjective=surjective,
        matrix_digest=matrix_digest(mat),
        citations=[cite("kernel_dimension_bridge"), cite("riemann_roch_k3n"), cite("mu_surjective")],
    )


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def cross_product_form(i: int) -> BidegreePoly:
    """(p, q) -> (p x q)_i = sum_jk eps_ijk p_j q_k as a (1,1)-form"""
    coefficients = {}
    for j, k in product(range(3), repeat=2):
        if len({i % 3, j, k}) == 3:
            coefficients[(_unit(j), _unit(k))] = Fraction(_permutation_sign((i % 3, j, k)))
    return BidegreePoly(bidegree=(1, 1), coefficients=coefficients)


def cross_product_identity_check(basis: Optional[Sequence[BidegreePoly]] = None) -> bool:
    """s_i equals the i-th component of the cross product, so {s_i = 0} is the preimage
    of a coordinate line under the map sending two points to the line they span"""
    basis = list(basis) if basis is not None else basis_V()
    return all(basis[i] == cross_product_form(i) for i in range(3))
