"""
The null-filiform associative algebra mu_0^n (e_i . e_j = e_{i+j}, i+j <= n)
and its automorphisms.

An automorphism is fixed by phi(e_1) = sum A_i e_i with A_1 != 0; then
phi(e_i) = phi(e_1)^i, whose e_j coefficient is the sum over compositions
k_1 + ... + k_i = j of A_{k_1} ... A_{k_i}.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from ..models import AutomorphismParams, BilinearMap, Matrix
from ..shared.config import settings
from ..utils.errors import ErrorHandler
from . import linalg
from .core import change_of_basis, make_bilinear_map

logger = logging.getLogger(__name__)


def build_mu0(n: int) -> BilinearMap:
    ErrorHandler.validate_dimension(n, settings.max_dim)
    return make_bilinear_map(n, [(i, j, i + j, 1) for i in range(1, n) for j in range(1, n - i + 1)])


# ====================================================
# COMPOSITIONS
# ====================================================

def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All (k_1, ..., k_parts) of positive integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def composition_coefficient(params: AutomorphismParams, parts: int, total: int) -> Fraction:
    """
    sum over k_1 + ... + k_parts = total of A_{k_1} ... A_{k_parts}, by direct
    enumeration. Reference value for auditing power_table; too slow for n = 64.
    """
    result = Fraction(0)
    for ks in compositions(total, parts):
        term = Fraction(1)
        for k in ks:
            term *= params.value(k)
        result += term
    return result


def power_table(params: AutomorphismParams, n: int) -> List[List[Fraction]]:
    """
    table[i][j] is the composition sum for i parts and total j (1 <= i, j <= n,
    row and column 0 unused). Built by splitting off the last part, which
    adds up the same products as the enumeration above.
    """
    A = [Fraction(0)] + [params.value(k) for k in range(1, n + 1)]
    table = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    table[1] = list(A)
    for i in range(2, n + 1):
        previous = table[i - 1]
        for j in range(i, n + 1):
            table[i][j] = sum((previous[j - k] * A[k] for k in range(1, j - i + 2) if A[k]), Fraction(0))
    return table


# ====================================================
# AUTOMORPHISMS
# ====================================================

def _check_params(params: AutomorphismParams, n: int) -> None:
    ErrorHandler.validate_dimension(n, settings.max_dim)
    if params.n != n:
        raise ErrorHandler.validation_error(
            f"Automorphism parameters have length {params.n} but the algebra has dimension {n}.",
            location="A",
        )


def automorphism_matrix(params: AutomorphismParams, n: int) -> Matrix:
    """Matrix whose column i holds phi(e_i); lower triangular with diagonal A_1^i."""
    _check_params(params, n)
    table = power_table(params, n)
    return tuple(tuple(table[i][j] for i in range(1, n + 1)) for j in range(1, n + 1))


def is_automorphism(dot: BilinearMap, P: Sequence[Sequence]) -> bool:
    if not linalg.is_square(P, dot.dim) or not linalg.is_invertible(P):
        return False
    return change_of_basis(dot, P) == dot


def automorphism_from_matrix(P: Sequence[Sequence]) -> AutomorphismParams:
    """Parameters read off the first column; the matrix is determined by them."""
    return AutomorphismParams(tuple(Fraction(row[0]) for row in P))


def compose_automorphisms(first: AutomorphismParams, second: AutomorphismParams) -> AutomorphismParams:
    """
    Parameters of the automorphism with matrix P_first . P_second, i.e.
    transforming by `first` and then by `second`.
    """
    n = first.n
    _check_params(second, n)
    return AutomorphismParams(tuple(linalg.matvec(automorphism_matrix(first, n), list(second.A))))


def invert_automorphism(params: AutomorphismParams) -> AutomorphismParams:
    n = params.n
    inverse = linalg.inverse(automorphism_matrix(params, n))
    return automorphism_from_matrix(inverse)
