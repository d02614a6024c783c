from typing import Any, Dict, List, Optional
from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator

from .models import CanonicalTag, SolveMode
from .utils.errors import AlgebraError
from .utils.rationals import format_rational, parse_rational


# ====================================================
# ALGEBRA DOCUMENTS
# ====================================================

class EntryDocument(BaseModel):
    """One structure constant: e_i * e_j has coefficient c at e_k."""
    model_config = ConfigDict(extra="forbid")

    i: StrictInt
    j: StrictInt
    k: StrictInt
    c: str = Field(..., description="Exact rational, e.g. \"3\" or \"-4/6\"")

    @field_validator("c", mode="before")
    @classmethod
    def normalise_rational(cls, value):
        # ints are accepted for convenience; floats never are
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise ValueError("must be an integer or a 'p/q' string")
        try:
            return format_rational(parse_rational(str(value)))
        except AlgebraError as error:
            raise ValueError(error.message)


class AlgebraDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: StrictInt = Field(..., ge=1)
    dot: List[EntryDocument] = Field(default_factory=list)
    bracket: Optional[List[EntryDocument]] = None
    meta: Optional[Dict[str, Any]] = None


# ====================================================
# VERIFY SCHEMAS
# ====================================================

class WitnessResponse(BaseModel):
    identity: str
    basis: List[int]
    residual: List[str]


class ChecksResponse(BaseModel):
    commutative: Optional[bool] = None
    associative: Optional[bool] = None
    antisymmetric: Optional[bool] = None
    jacobi: Optional[bool] = None
    leibniz: Optional[bool] = None
    transposed_leibniz: Optional[bool] = None
    mixed_trivial: Optional[bool] = None
    witnesses: List[WitnessResponse] = Field(default_factory=list)


class StructuresResponse(BaseModel):
    poisson: bool
    transposed_poisson: bool


# ====================================================
# CLASSIFICATION SCHEMAS
# ====================================================

class CanonicalFormResponse(BaseModel):
    n: int
    tag: CanonicalTag
    s: Optional[int] = None
    modulus: Optional[str] = None


class TranscriptStepResponse(BaseModel):
    A: List[str]
    target: int
    alpha: List[str]


class TranscriptResponse(BaseModel):
    start: List[str]
    steps: List[TranscriptStepResponse] = Field(default_factory=list)
    reduced: List[str]
    note: Optional[str] = None


class StructureSummaryResponse(BaseModel):
    trivial: bool
    nilpotent: bool
    solvable: bool
    derived_dims: List[int]
    lower_central_dims: List[int]


class ClassifyResponse(BaseModel):
    canonical: CanonicalFormResponse
    transcript: Optional[TranscriptResponse] = None
    structure: StructureSummaryResponse


class IsomorphismResponse(BaseModel):
    isomorphic: bool
    witness: Optional[List[str]] = None
    canonical_a: CanonicalFormResponse
    canonical_b: CanonicalFormResponse


class FamilyResponse(BaseModel):
    tag: CanonicalTag
    s: Optional[int] = None
    has_modulus: bool
    label: str


class ClassificationTableResponse(BaseModel):
    n: int
    families: List[FamilyResponse]


# ====================================================
# SOLVER SCHEMAS
# ====================================================

class SolutionResponse(BaseModel):
    n: int
    mode: SolveMode
    dimension: int
    unknowns: int
    rank: int
    basis: List[List[EntryDocument]]
    residual_constraints: List[str]


# ====================================================
# REPORT
# ====================================================

class ReportDocument(BaseModel):
    """Combined output of `verify`; optional blocks are omitted when absent."""
    checks: ChecksResponse
    structures: Optional[StructuresResponse] = None
    canonical: Optional[CanonicalFormResponse] = None
    transcript: Optional[TranscriptResponse] = None
    solution: Optional[SolutionResponse] = None
    expect: Optional[str] = None
    passed: Optional[bool] = None
