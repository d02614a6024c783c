from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .utils.errors import ErrorHandler, ErrorMessages

Scalar = Fraction
Vector = Tuple[Fraction, ...]
SparseVector = Dict[int, Fraction]
Matrix = Tuple[Tuple[Fraction, ...], ...]


class SeriesKind(str, Enum):
    """
    Which chain of subspaces `series` computes.
    """
    POWER = "power"                  # A^{i+1} = sum_k A^k A^{i+1-k}
    DERIVED = "derived"              # D^{i+1} = D^i D^i
    LOWER_CENTRAL = "lower_central"  # L^{i+1} = L L^i


class SolveMode(str, Enum):
    """
    Compatibility identity imposed when solving for brackets on a fixed product.
    """
    TRANSPOSED = "transposed"  # 2z.[x,y] = [z.x,y] + [x,z.y]
    POISSON = "poisson"        # [x,y.z] = [x,y].z + y.[x,z]


class CanonicalTag(str, Enum):
    """
    Families of the classification of TP structures on mu_0^n.
    """
    TRIVIAL = "Trivial"  # zero bracket
    S2 = "S2"            # TP(1,0,...,0)
    S3 = "S3"            # TP(0,alpha,0,...,0)
    S = "S"              # TP(0,...,0,1_s,0,...,0,alpha_{2s-3},0,...,0), s >= 4


class Expectation(str, Enum):
    """Structure a `verify` run is required to confirm."""
    POISSON = "poisson"
    TRANSPOSED = "transposed"
    BOTH = "both"


class IdentityName(str, Enum):
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    ANTISYMMETRIC = "antisymmetric"
    JACOBI = "jacobi"
    LEIBNIZ = "leibniz"
    TRANSPOSED_LEIBNIZ = "transposed_leibniz"
    MIXED_TRIVIAL = "mixed_trivial"


@dataclass(frozen=True, eq=False)
class BilinearMap:
    """
    Structure constants of a bilinear product on an n-dimensional space.

    `coeffs` maps (i, j, k) to the coefficient of e_k in e_i * e_j, all indices
    1-based. Only nonzero entries are stored, so two maps are equal exactly
    when their stored entries agree. Build instances with
    `app.algebra.core.make_bilinear_map`, which validates indices.
    """
    dim: int
    coeffs: Mapping[Tuple[int, int, int], Fraction]

    def __eq__(self, other):
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.dim == other.dim and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    @cached_property
    def table(self) -> Mapping[Tuple[int, int], Mapping[int, Fraction]]:
        rows: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (i, j, k), c in self.coeffs.items():
            rows.setdefault((i, j), {})[k] = c
        return MappingProxyType({key: MappingProxyType(value) for key, value in rows.items()})

    def product(self, i: int, j: int) -> Mapping[int, Fraction]:
        """e_i * e_j as a sparse vector"""
        return self.table.get((i, j), MappingProxyType({}))

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        return self.coeffs.get((i, j, k), Fraction(0))

    def entries(self) -> Tuple[Tuple[int, int, int, Fraction], ...]:
        return tuple((i, j, k, c) for (i, j, k), c in sorted(self.coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class AlgebraPair:
    """
    A commutative associative product together with a candidate Lie bracket.
    """
    dot: BilinearMap
    bracket: BilinearMap

    def __post_init__(self):
        if self.dot.dim != self.bracket.dim:
            raise ErrorHandler.validation_error(
                f"Product has dimension {self.dot.dim} but bracket has dimension {self.bracket.dim}.",
                location="bracket",
            )

    @property
    def dim(self) -> int:
        return self.dot.dim


@dataclass(frozen=True)
class SubspaceChain:
    """Dimensions and reduced echelon bases of a descending chain of subspaces."""
    kind: SeriesKind
    dims: Tuple[int, ...]
    bases: Tuple[Tuple[Vector, ...], ...]

    @property
    def reaches_zero(self) -> bool:
        return self.dims[-1] == 0


@dataclass(frozen=True)
class IdentityWitness:
    identity: IdentityName
    basis: Tuple[int, ...]  # 1-based basis indices of the failing pair or triple
    residual: Vector


@dataclass(frozen=True)
class IdentityReport:
    """
    Flags set to None were not checked. A flag is False exactly when a
    witness for it is recorded.
    """
    commutative: Optional[bool] = None
    associative: Optional[bool] = None
    antisymmetric: Optional[bool] = None
    jacobi: Optional[bool] = None
    leibniz: Optional[bool] = None
    transposed_leibniz: Optional[bool] = None
    mixed_trivial: Optional[bool] = None
    witnesses: Tuple[IdentityWitness, ...] = ()

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        values = {}
        for name in IdentityName:
            mine, theirs = getattr(self, name.value), getattr(other, name.value)
            values[name.value] = theirs if mine is None else mine
        return IdentityReport(**values, witnesses=self.witnesses + other.witnesses)

    def flags(self) -> Dict[str, Optional[bool]]:
        return {name.value: getattr(self, name.value) for name in IdentityName}

    def failed(self) -> Tuple[str, ...]:
        return tuple(name for name, value in self.flags().items() if value is False)


@dataclass(frozen=True)
class AutomorphismParams:
    """
    First column (A_1, ..., A_n) of an automorphism of mu_0^n; it determines
    the whole map.
    """
    A: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.A:
            raise ErrorHandler.validation_error("Automorphism parameters must not be empty.", location="A")
        if self.A[0] == 0:
            raise ErrorHandler.validation_error(ErrorMessages.A1_ZERO, location="A[1]")

    @classmethod
    def of(cls, values: Sequence) -> "AutomorphismParams":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> "AutomorphismParams":
        return cls((Fraction(1),) + (Fraction(0),) * (n - 1))

    @property
    def n(self) -> int:
        return len(self.A)

    def value(self, k: int) -> Fraction:
        """A_k, 1-based"""
        return self.A[k - 1]


@dataclass(frozen=True)
class AlphaParams:
    """
    Parameters (alpha_2, ..., alpha_n) of the TP family. `alpha1` is only set
    for pre-Jacobi data; classified data leaves it absent (None) or zero.
    """
    n: int
    alpha: Tuple[Fraction, ...]
    alpha1: Optional[Fraction] = None

    def __post_init__(self):
        if self.n < 1:
            raise ErrorHandler.validation_error(f"Invalid dimension {self.n}.", location="n")
        if len(self.alpha) != self.n - 1:
            raise ErrorHandler.validation_error(
                f"{ErrorMessages.ALPHA_LENGTH} Expected {self.n - 1} values, got {len(self.alpha)}.",
                location="alpha",
            )

    @classmethod
    def of(cls, n: int, values: Sequence, alpha1=None) -> "AlphaParams":
        return cls(n, tuple(Fraction(v) for v in values), None if alpha1 is None else Fraction(alpha1))

    @classmethod
    def zero(cls, n: int) -> "AlphaParams":
        return cls(n, (Fraction(0),) * (n - 1))

    @classmethod
    def indicator(cls, n: int, t: int) -> "AlphaParams":
        return cls(n, tuple(Fraction(1 if index == t else 0) for index in range(2, n + 1)))

    def value(self, t: int) -> Fraction:
        """alpha_t for 1 <= t <= n; alpha_1 reads the optional slot"""
        if t == 1:
            return self.alpha1 or Fraction(0)
        return self.alpha[t - 2]

    @property
    def is_classified(self) -> bool:
        return not self.alpha1

    @property
    def is_zero(self) -> bool:
        return not any(self.alpha)

    def without_alpha1(self) -> "AlphaParams":
        return AlphaParams(self.n, self.alpha)


@dataclass(frozen=True)
class SolutionSpace:
    """
    Basis of the brackets solving a linear identity system on mu_0^n, with the
    Jacobi identity left as polynomial constraints in the basis coordinates
    c1, ..., cd.
    """
    n: int
    mode: SolveMode
    basis: Tuple[BilinearMap, ...]
    residual_constraints: Tuple = ()  # sympy expressions, each required to vanish
    unknowns: int = 0
    rank: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ReductionStep:
    automorphism: AutomorphismParams
    target: int                       # index whose coefficient the step removes
    result: AlphaParams


@dataclass(frozen=True)
class ReductionTranscript:
    start: AlphaParams
    steps: Tuple[ReductionStep, ...] = ()
    note: Optional[str] = None

    @property
    def final(self) -> AlphaParams:
        return self.steps[-1].result if self.steps else self.start


@dataclass(frozen=True)
class CanonicalForm:
    """
    Tagged classification result. `modulus` is alpha_3 for S3 and the ratio
    beta_{2s-3} / beta_s^2 for S when 2s-3 <= n.
    """
    n: int
    tag: CanonicalTag
    s: Optional[int] = None
    modulus: Optional[Fraction] = None


@dataclass(frozen=True)
class ClassificationFamily:
    tag: CanonicalTag
    s: Optional[int]
    has_modulus: bool
    label: str


@dataclass(frozen=True)
class OracleComparison:
    """Outcome of comparing a solved bracket space with the TP family."""
    n: int
    nullspace_dimension: int
    family_dimension: int
    family_contained: bool
    jacobi_vanishes_on_family: bool
    extra_dimension: int
    extra_forced_zero: bool

    @property
    def equal(self) -> bool:
        return (
            self.family_contained
            and self.jacobi_vanishes_on_family
            and (self.extra_dimension == 0 or self.extra_forced_zero)
        )


@dataclass(frozen=True)
class StructureSummary:
    trivial: bool
    nilpotent: bool
    solvable: bool
    derived_dims: Tuple[int, ...] = field(default_factory=tuple)
    lower_central_dims: Tuple[int, ...] = field(default_factory=tuple)
