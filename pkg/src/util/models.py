"""
Centralized definitions for Pydantic models used across the base-locus toolkit.
This module contains the immutable domain values exchanged between the tools and
the request models used to validate command-line input.
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from constants import (
    BASES,
    GENUS_TWO_HALF_SQUARE,
    GENUS_TWO_N,
    LAMBDA_TAG_DEFAULT,
    MAX_SEARCH_BOUND,
    MAX_SWEEP,
    MIN_HILBERT_N,
)

Model = Literal["x", "xprime"]
Basis = Literal["hdelta", "hl"]
MonomialPair = Tuple[Tuple[int, int, int], Tuple[int, int, int]]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ValueError(f"expected an exact rational, got {type(value).__name__}")


class Verdict(str, Enum):
    FREE = "Free"
    PLANE_P2_REDUCED = "PlaneP2Reduced"
    NOT_NEF = "NotNef"
    ZERO_CLASS = "ZeroClass"


class Justification(str, Enum):
    KODAIRA_BIG_NEF = "KodairaBigNef"
    LAGRANGIAN_PRIMITIVE = "LagrangianPrimitive"
    NOT_DETERMINED = "NotDetermined"


class Citation(BaseModel):
    """A statement id from the citations manifest together with its quote"""
    model_config = ConfigDict(frozen=True)

    statement: str = Field(..., description="Statement id in the citations manifest")
    quote: str = Field(..., description="Quote, verbatim from the manifest")


# Lattice models
class GeneralClass(BaseModel):
    """Formal class a*lambda + b*delta in the lattice of K3^[n]-type"""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., description="Coefficient of the primitive class lambda")
    b: int = Field(..., description="Coefficient of delta")
    d0: int = Field(..., description="Half of q(lambda); any integer since the K3 lattice is even")
    n: int = Field(default=GENUS_TWO_N, ge=MIN_HILBERT_N, description="Hilbert scheme parameter")
    lambda_tag: str = Field(default=LAMBDA_TAG_DEFAULT, description="Opaque name of the lambda line")

    def same_ambient(self, other: "GeneralClass") -> bool:
        return self.n == other.n and self.lambda_tag == other.lambda_tag and self.d0 == other.d0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other: "GeneralClass") -> "GeneralClass":
        if not isinstance(other, GeneralClass):
            return NotImplemented
        if not self.same_ambient(other):
            from util.exceptions import MismatchedAmbientError
            raise MismatchedAmbientError("cannot add classes over different ambients")
        return self.model_copy(update={"a": self.a + other.a, "b": self.b + other.b})

    def scaled(self, k: int) -> "GeneralClass":
        return self.model_copy(update={"a": k * self.a, "b": k * self.b})


class HLClass(BaseModel):
    """Class a*H + b*L of the genus-2 example, on X or (via birational transform) on X'"""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., description="Coefficient of H")
    b: int = Field(..., description="Coefficient of L = H - delta")
    model: Model = Field(default="x", description="Birational model the class lives on")

    @property
    def coords(self) -> Tuple[int, int]:
        return (self.a, self.b)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def on(self, model: str) -> "HLClass":
        return self.model_copy(update={"model": model})

    def scaled(self, k: int) -> "HLClass":
        return self.model_copy(update={"a": k * self.a, "b": k * self.b})


class GramLattice(BaseModel):
    """Even integral lattice given by its Gram matrix"""
    model_config = ConfigDict(frozen=True)

    rank: int = Field(..., ge=1, description="Rank of the lattice")
    gram: Tuple[Tuple[int, ...], ...] = Field(..., description="Symmetric integer Gram matrix")

    @model_validator(mode='after')
    def validate_gram(self):
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise ValueError("gram must be a square matrix of size rank")
        for i in range(self.rank):
            if self.gram[i][i] % 2 != 0:
                raise ValueError("gram must have an even diagonal")
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram must be symmetric")
        return self

    def pair(self, u, v) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def square(self, u) -> int:
        return self.pair(u, u)


# Cone model
class ConeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    in_positive_cone_closure: bool
    in_birational_kahler_closure: bool
    in_nef_X: bool
    in_nef_Xprime: bool
    on_flop_wall: bool
    is_big: bool

    @model_validator(mode='after')
    def validate_nesting(self):
        for nef in (self.in_nef_X, self.in_nef_Xprime):
            if nef and not self.in_birational_kahler_closure:
                raise ValueError("nef classes must lie in the birational Kahler cone")
        if self.in_birational_kahler_closure and not self.in_positive_cone_closure:
            raise ValueError("birational Kahler cone must lie in the positive cone")
        if self.on_flop_wall and not (self.in_nef_X and self.in_nef_Xprime):
            raise ValueError("flop wall classes are nef on both models")
        return self


# Riemann-Roch model
class SectionCount(BaseModel):
    model_config = ConfigDict(frozen=True)

    chi: int
    h0: Optional[int] = None
    justification: Justification

    @model_validator(mode='after')
    def validate_h0(self):
        if self.justification == Justification.KODAIRA_BIG_NEF and self.h0 != self.chi:
            raise ValueError("h0 equals chi for big and nef classes")
        if self.justification == Justification.NOT_DETERMINED and self.h0 is not None:
            raise ValueError("h0 must be absent when it is not determined")
        return self


# Flop models
class BlowupClass(BaseModel):
    """phi^*(base) + e_coeff * E in Pic of the common blow-up, rational coefficients"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: HLClass
    e_coeff: Fraction = Field(default=Fraction(0), description="Coefficient of the exceptional divisor E")

    @field_validator('e_coeff', mode='before')
    @classmethod
    def to_fraction(cls, v):
        return _as_fraction(v)

    def minus_exceptional(self, k: int) -> "BlowupClass":
        return self.model_copy(update={"e_coeff": self.e_coeff - k})


class ExceptionalBidegree(BaseModel):
    """Restriction to E, which sits in P2 x P2-dual, as O(s, t)"""
    model_config = ConfigDict(frozen=True)

    s: int
    t: int


class TraceStep(BaseModel):
    """One inequality checked while replaying a vanishing argument"""
    model_config = ConfigDict(frozen=True)

    check: str = Field(..., description="The condition checked, in words or as an inequality")
    value: str = Field(default="", description="The value the condition was evaluated at")
    holds: bool
    citation: Citation


# Base-locus models
class BaseLocusReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    model: Model
    verdict: Verdict
    big: bool
    citations: List[Citation] = Field(default_factory=list)

    @model_validator(mode='after')
    def validate_verdict(self):
        if self.verdict == Verdict.PLANE_P2_REDUCED and (self.model, self.a, self.b) != ("x", 1, 1):
            raise ValueError("only H+L on X has a P2 base locus")
        if self.verdict in (Verdict.FREE, Verdict.PLANE_P2_REDUCED) and not self.citations:
            raise ValueError("verdicts other than NotNef and ZeroClass must carry citations")
        return self


class MayerDecomposition(BaseModel):
    """Numerical candidate h = m*E + C; effectivity of E and C is not checked"""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=2)
    E: Tuple[int, ...] = Field(..., description="Isotropic class")
    C: Tuple[int, ...] = Field(..., description="Residual class, q(C) = -2 for Mayer type")

    @computed_field
    @property
    def base_locus_class(self) -> Tuple[int, ...]:
        return self.C


class ModuliVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    m: int
    nonempty: bool
    witness: Optional[GeneralClass] = None
    witness_hl: Optional[HLClass] = None
    generic_bpf: Optional[bool] = None
    citations: List[Citation] = Field(default_factory=list)


# Section-space models
class BidegreePoly(BaseModel):
    """Multihomogeneous polynomial on P2 x P2 with exact rational coefficients"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bidegree: Tuple[int, int]
    coefficients: Dict[MonomialPair, Fraction] = Field(default_factory=dict)

    @field_validator('bidegree')
    @classmethod
    def validate_bidegree(cls, v):
        if v[0] < 0 or v[1] < 0:
            raise ValueError("bidegree must be nonnegative")
        return v

    @field_validator('coefficients', mode='before')
    @classmethod
    def drop_zero_terms(cls, v):
        out = {}
        for key, coeff in dict(v).items():
            coeff = _as_fraction(coeff)
            if coeff != 0:
                out[(tuple(key[0]), tuple(key[1]))] = coeff
        return out

    @model_validator(mode='after')
    def validate_weights(self):
        d1, d2 = self.bidegree
        for alpha, beta in self.coefficients:
            if sum(alpha) != d1 or sum(beta) != d2 or min(alpha + beta) < 0:
                raise ValueError(f"monomial {alpha}x{beta} does not have bidegree {self.bidegree}")
        return self

    def __add__(self, other: "BidegreePoly") -> "BidegreePoly":
        if self.bidegree != other.bidegree:
            from util.exceptions import BidegreeMismatchError
            raise BidegreeMismatchError(self.bidegree, other.bidegree)
        merged = dict(self.coefficients)
        for key, coeff in other.coefficients.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return BidegreePoly(bidegree=self.bidegree, coefficients=merged)

    def scaled(self, k) -> "BidegreePoly":
        return BidegreePoly(bidegree=self.bidegree,
                            coefficients={key: k * c for key, c in self.coefficients.items()})

    @property
    def is_zero(self) -> bool:
        return not self.coefficients


class ExactMatrix(BaseModel):
    """Dense matrix of exact rationals"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rows: int = Field(..., ge=0)
    cols: int = Field(..., ge=0)
    entries: Tuple[Tuple[Fraction, ...], ...]

    @field_validator('entries', mode='before')
    @classmethod
    def to_fractions(cls, v):
        return tuple(tuple(_as_fraction(x) for x in row) for row in v)

    @model_validator(mode='after')
    def validate_shape(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self

    @classmethod
    def from_rows(cls, rows, cols: Optional[int] = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(rows=len(rows), cols=width, entries=rows)


class KernelVerificationReport(BaseModel):
    """Outcome of the exact check of the multiplication map V x W -> H0(O(2,2))"""
    model_config = ConfigDict(frozen=True)

    source_dimension: int
    target_dimension: int
    rank: int
    kernel_dimension: int
    stated_vectors_annihilated: List[bool]
    stated_vectors_independent: bool
    stated_vectors_span_kernel: bool
    h0_h_plus_l: int
    surjective: bool
    matrix_digest: str
    citations: List[Citation] = Field(default_factory=list)


class JsonReport(BaseModel):
    command: str
    inputs: Dict[str, Any]
    result: Any
    citations: List[Citation] = Field(default_factory=list)


# Request models
class ClassRequest(BaseModel):
    """Model for requests naming a single lattice class"""
    a: int = Field(..., description="First coordinate")
    b: int = Field(..., description="Second coordinate")
    d0: int = Field(default=GENUS_TWO_HALF_SQUARE, description="Half of q(lambda)")
    n: int = Field(default=GENUS_TWO_N, ge=MIN_HILBERT_N, description="Hilbert scheme parameter")
    basis: Basis = Field(default="hdelta", description="Coordinates: (H, delta) or (H, L)")

    @model_validator(mode='after')
    def validate_basis(self):
        if self.basis == "hl" and (self.d0, self.n) != (GENUS_TWO_HALF_SQUARE, GENUS_TWO_N):
            raise ValueError("the (H, L) basis only exists for d0 = 1 and n = 2")
        return self


class PairRequest(BaseModel):
    """Model for pairing two classes over a shared lambda"""
    a1: int
    b1: int
    a2: int
    b2: int
    d0: int = Field(default=GENUS_TWO_HALF_SQUARE)
    n: int = Field(default=GENUS_TWO_N, ge=MIN_HILBERT_N)
    basis: Basis = Field(default="hdelta")

    @model_validator(mode='after')
    def validate_basis(self):
        if self.basis == "hl" and (self.d0, self.n) != (GENUS_TWO_HALF_SQUARE, GENUS_TWO_N):
            raise ValueError("the (H, L) basis only exists for d0 = 1 and n = 2")
        return self


class ChiRequest(BaseModel):
    q: int = Field(..., description="BBF square of the line bundle")
    n: int = Field(..., ge=1, description="Hilbert scheme parameter")


class HLRequest(BaseModel):
    """Model for requests on the genus-2 example, (H, L) coordinates"""
    a: int
    b: int
    model: Model = Field(default="x", description="Birational model: x or xprime")

    @field_validator('model', mode='before')
    @classmethod
    def normalize_model(cls, v):
        return v.lower() if isinstance(v, str) else v


class MayerRequest(BaseModel):
    """Model for Mayer-type decomposition searches"""
    gram: List[int] = Field(..., min_length=1, description="Upper triangle of the Gram matrix, row by row")
    h: List[int] = Field(..., min_length=1)
    bound: int = Field(default=5, ge=1, le=MAX_SEARCH_BOUND)
    fixed_divisor: bool = False
    nonnegative: bool = False

    @model_validator(mode='after')
    def validate_sizes(self):
        rank = 0
        while rank * (rank + 1) // 2 < len(self.gram):
            rank += 1
        if rank * (rank + 1) // 2 != len(self.gram):
            raise ValueError("gram must list the upper triangle: 1, 3, 6, ... entries")
        if len(self.h) != rank:
            raise ValueError(f"h must have {rank} coordinates")
        return self

    def lattice(self) -> GramLattice:
        rank = len(self.h)
        matrix = [[0] * rank for _ in range(rank)]
        values = iter(self.gram)
        for i in range(rank):
            for j in range(i, rank):
                matrix[i][j] = matrix[j][i] = next(values)
        return GramLattice(rank=rank, gram=tuple(tuple(r) for r in matrix))


class ModuliRequest(BaseModel):
    d: int
    m: int


class SweepRequest(BaseModel):
    max: int = Field(..., ge=0, le=MAX_SWEEP)
    model: Model = Field(default="x")

