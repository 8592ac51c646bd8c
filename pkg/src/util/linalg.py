"""
Exact fraction-free (Bareiss) elimination over the rationals.

The kernel computed here is the left kernel: vectors y with y * M = 0, i.e.
the kernel of the linear map whose source basis indexes the rows of M.
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

from util.models import ExactMatrix

# Configure logging
logger = logging.getLogger("k3.baselocus")

Vector = Tuple[Fraction, ...]


def _normalize(vector: Sequence[Fraction]) -> Vector:
    """Scale to a primitive integer vector whose first nonzero entry is positive"""
    denominators = lcm(*(x.denominator for x in vector)) if vector else 1
    integral = [int(x * denominators) for x in vector]
    content = gcd(*integral)
    if content == 0:
        return tuple(Fraction(0) for _ in vector)
    lead = next(x for x in integral if x != 0)
    if lead < 0:
        content = -content
    return tuple(Fraction(x // content) for x in integral)


def bareiss_echelon(rows: List[List[Fraction]], pivot_width: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Fraction-free forward elimination on the first pivot_width columns

    Pivot choice is deterministic: the first nonzero entry scanning down the current
    column. Returns the eliminated rows and the pivot columns.
    """
    work = [list(row) for row in rows]
    previous = Fraction(1)
    pivot_row = 0
    pivots = []
    for col in range(pivot_width):
        selected = next((r for r in range(pivot_row, len(work)) if work[r][col] != 0), None)
        if selected is None:
            continue
        if selected != pivot_row:
            work[pivot_row], work[selected] = work[selected], work[pivot_row]
        pivot = work[pivot_row][col]
        for r in range(pivot_row + 1, len(work)):
            factor = work[r][col]
            work[r] = [(pivot * x - factor * y) / previous for x, y in zip(work[r], work[pivot_row])]
        previous = pivot
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    return work, pivots


def rank_and_kernel(mat: ExactMatrix) -> Tuple[int, List[Vector]]:
    """Rank of mat and a basis of {y : y * mat = 0}; rank + len(kernel) = mat.rows"""
    identity = [[Fraction(int(i == j)) for j in range(mat.rows)] for i in range(mat.rows)]
    augmented = [list(row) + identity[i] for i, row in enumerate(mat.entries)]
    reduced, pivots = bareiss_echelon(augmented, mat.cols)
    rank = len(pivots)
    kernel = [_normalize(row[mat.cols:]) for row in reduced[rank:]]
    logger.debug(f"rank_and_kernel on {mat.rows}x{mat.cols}: rank {rank}, kernel {len(kernel)}")
    return rank, kernel


def matrix_rank(mat: ExactMatrix) -> int:
    _, pivots = bareiss_echelon([list(row) for row in mat.entries], mat.cols)
    return len(pivots)


def left_apply(vector: Sequence[Fraction], mat: ExactMatrix) -> Vector:
    """vector * mat"""
    return tuple(
        sum((vector[i] * mat.entries[i][j] for i in range(mat.rows)), Fraction(0))
        for j in range(mat.cols)
    )
