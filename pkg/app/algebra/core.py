"""
Structure-constant tensors: construction, evaluation, basis change and the
power / derived / lower central series.
"""
import logging
from fractions import Fraction
from itertools import product
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..models import BilinearMap, SeriesKind, SparseVector, SubspaceChain, Vector
from ..shared.config import settings
from ..utils.errors import ErrorHandler, ErrorMessages
from ..utils.rationals import ScalarLike, as_scalar
from . import linalg

logger = logging.getLogger(__name__)


# ====================================================
# CONSTRUCTION
# ====================================================

def make_bilinear_map(dim: int, entries: Iterable[Tuple[int, int, int, ScalarLike]]) -> BilinearMap:
    """Tensor with the given entries; duplicates are summed and zeros dropped."""
    ErrorHandler.validate_dimension(dim, settings.max_dim)
    coeffs: Dict[Tuple[int, int, int], Fraction] = {}
    for position, (i, j, k, c) in enumerate(entries):
        for name, index in (("i", i), ("j", j), ("k", k)):
            ErrorHandler.validate_index(index, dim, f"entries[{position}].{name}")
        key = (i, j, k)
        coeffs[key] = coeffs.get(key, Fraction(0)) + as_scalar(c, f"entries[{position}].c")
    return BilinearMap(dim, MappingProxyType({key: value for key, value in coeffs.items() if value}))


def zero_map(dim: int) -> BilinearMap:
    return make_bilinear_map(dim, [])


# ====================================================
# EVALUATION
# ====================================================

def add_into(target: SparseVector, source: Mapping[int, Fraction], scale: Fraction = Fraction(1)) -> SparseVector:
    """target += scale * source, dropping cancelled entries"""
    if not scale:
        return target
    for k, value in source.items():
        total = target.get(k, Fraction(0)) + scale * value
        if total:
            target[k] = total
        else:
            target.pop(k, None)
    return target


def apply_sparse(B: BilinearMap, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> SparseVector:
    result: SparseVector = {}
    for i, xi in x.items():
        for j, yj in y.items():
            add_into(result, B.product(i, j), xi * yj)
    return result


def to_sparse(vector: Sequence) -> SparseVector:
    return {index + 1: Fraction(value) for index, value in enumerate(vector) if value}


def to_dense(vector: Mapping[int, Fraction], dim: int) -> Vector:
    return tuple(vector.get(k, Fraction(0)) for k in range(1, dim + 1))


def apply(B: BilinearMap, x: Sequence, y: Sequence) -> Vector:
    """sum_ij x_i y_j B(e_i, e_j), exactly"""
    ErrorHandler.validate_vector_length(x, B.dim, "x")
    ErrorHandler.validate_vector_length(y, B.dim, "y")
    return to_dense(apply_sparse(B, to_sparse(x), to_sparse(y)), B.dim)


# ====================================================
# SERIES
# ====================================================

def _power_pairs(layers: Sequence[Sequence[SparseVector]], i: int) -> Iterator[Tuple[SparseVector, SparseVector]]:
    """
    Pairs spanning A^{i+1}. layers[a] spans a complement of A^{a+2} in A^{a+1}
    and the last layer spans A^i, so A^k A^{i+1-k} summed over k is spanned
    by the products of layers a, b with a + b + 2 >= i + 1.
    """
    for a, left in enumerate(layers):
        for b, right in enumerate(layers):
            if a + b + 1 >= i:
                for u in left:
                    for v in right:
                        yield u, v


def series(B: BilinearMap, kind: SeriesKind = SeriesKind.POWER) -> SubspaceChain:
    """
    Chain of subspaces computed until it reaches zero or stops changing.

    power:          A^1 = A, A^{i+1} = sum_{k=1}^{i} A^k A^{i+1-k}
    derived:        D^1 = A, D^{i+1} = D^i D^i
    lower_central:  L^1 = A, L^{i+1} = A L^i

    Each term lies in the previous one, so a step stops as soon as its span
    reaches the previous dimension: the chain has stalled.
    """
    kind = SeriesKind(kind)
    n = B.dim
    units: List[SparseVector] = [{k: Fraction(1)} for k in range(1, n + 1)]
    chain: List[List[SparseVector]] = [units]
    layers: List[List[SparseVector]] = [units]
    while chain[-1] and len(chain) <= n + 1:
        i = len(chain)
        current = chain[-1]
        if kind is SeriesKind.POWER:
            pairs = _power_pairs(layers, i)
        elif kind is SeriesKind.DERIVED:
            pairs = product(current, current)
        else:
            pairs = product(units, current)
        span = linalg.SparseSpan()
        for u, v in pairs:
            image = apply_sparse(B, u, v)
            if image and span.add(image) and span.rank == len(current):
                break
        if span.rank == len(current):
            break
        following = span.basis()
        if kind is SeriesKind.POWER:
            complement = linalg.SparseSpan(following)
            layers[-1] = [u for u in layers[-1] if complement.add(u)]
            layers.append(following)
        chain.append(following)
    dims = tuple(len(basis) for basis in chain)
    logger.debug("%s series dims %s", kind.value, dims)
    bases = tuple(tuple(to_dense(row, n) for row in basis) for basis in chain)
    return SubspaceChain(kind=kind, dims=dims, bases=bases)


def lower_central_series(B: BilinearMap) -> SubspaceChain:
    return series(B, SeriesKind.LOWER_CENTRAL)


def nilindex(B: BilinearMap) -> Optional[int]:
    """Smallest i with A^i = 0, or None when the power series stalls above zero."""
    chain = series(B, SeriesKind.POWER)
    return len(chain.dims) if chain.reaches_zero else None


def is_nilpotent(B: BilinearMap) -> bool:
    return nilindex(B) is not None


def is_solvable(B: BilinearMap) -> bool:
    return series(B, SeriesKind.DERIVED).reaches_zero


def is_null_filiform(B: BilinearMap) -> bool:
    n = B.dim
    expected = tuple(n + 1 - i for i in range(1, n + 2))
    return series(B, SeriesKind.POWER).dims == expected


# ====================================================
# BASIS CHANGE
# ====================================================

def change_of_basis(B: BilinearMap, P: Sequence[Sequence]) -> BilinearMap:
    """
    B'(x, y) = P^{-1} B(Px, Py): the product written in the basis formed by
    the columns of P. Right action: change_of_basis(change_of_basis(B, Q), P)
    equals change_of_basis(B, Q P).
    """
    n = B.dim
    if not linalg.is_square(P, n):
        raise ErrorHandler.validation_error(ErrorMessages.NOT_SQUARE, location="P")
    matrix = linalg.as_matrix(P)
    inverse = linalg.inverse(matrix)
    columns = [{r + 1: row[c] for r, row in enumerate(matrix) if row[c]} for c in range(n)]
    keys, images = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            image = apply_sparse(B, columns[i - 1], columns[j - 1])
            if image:
                keys.append((i, j))
                images.append(to_dense(image, n))
    if not images:
        return make_bilinear_map(n, [])
    # one column of coordinates per nonzero image
    coordinates = linalg.matmul(inverse, [list(row) for row in zip(*images)])
    entries = [
        (i, j, k + 1, coordinates[k][index])
        for index, (i, j) in enumerate(keys)
        for k in range(n)
        if coordinates[k][index]
    ]
    return make_bilinear_map(n, entries)
