"""
Exact linear algebra over the rationals.

Dense products, inverses and ranks go through sympy's DomainMatrix over QQ.
Spans of sparse vectors are grown one vector at a time in reduced echelon
form (`SparseSpan`). The nullspace and rank routines used by the bracket
solver run a sparse fraction-free elimination: every row is scaled to a
primitive integer row, pivots are chosen by largest magnitude, and
eliminated rows are divided by their content so entries stay small.
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..utils.errors import ErrorHandler, ErrorMessages

logger = logging.getLogger(__name__)

IntRow = Dict[int, int]
SparseRow = Dict[int, Fraction]


# ====================================================
# DENSE MATRICES
# ====================================================

def as_matrix(rows: Sequence[Sequence]) -> List[List[Fraction]]:
    return [[Fraction(value) for value in row] for row in rows]


def is_square(rows: Sequence[Sequence], n: int) -> bool:
    return len(rows) == n and all(len(row) == n for row in rows)


def to_domain(rows: Sequence[Sequence]) -> DomainMatrix:
    matrix = as_matrix(rows)
    return DomainMatrix.from_list([[(v.numerator, v.denominator) for v in row] for row in matrix], QQ)


def from_domain(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in matrix.to_list()]


def identity(n: int) -> List[List[Fraction]]:
    return from_domain(DomainMatrix.eye(n, QQ))


def matmul(left: Sequence[Sequence], right: Sequence[Sequence]) -> List[List[Fraction]]:
    return from_domain(to_domain(left).matmul(to_domain(right)))


def matvec(matrix: Sequence[Sequence], vector: Sequence) -> List[Fraction]:
    return [row[0] for row in matmul(matrix, [[value] for value in vector])]


def inverse(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Exact inverse; a singular matrix is an input error."""
    if not is_square(matrix, len(matrix)):
        raise ErrorHandler.validation_error(ErrorMessages.NOT_SQUARE, location="P")
    try:
        return from_domain(to_domain(matrix).inv())
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        raise ErrorHandler.singular_matrix_error("P")


def is_invertible(matrix: Sequence[Sequence]) -> bool:
    n = len(matrix)
    return is_square(matrix, n) and (n == 0 or to_domain(matrix).rank() == n)


# ====================================================
# SPANS OF SPARSE VECTORS
# ====================================================

class SparseSpan:
    """
    Reduced row echelon basis of a growing span. Rows are keyed by pivot
    (their smallest index, coefficient 1) and vanish on every other pivot,
    so reducing a vector takes one pass over its support.
    """

    def __init__(self, vectors: Iterable[Mapping[int, Fraction]] = ()):
        self._rows: Dict[int, SparseRow] = {}
        for vector in vectors:
            self.add(vector)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Mapping[int, Fraction]) -> SparseRow:
        residue = {c: Fraction(v) for c, v in vector.items() if v}
        for pivot in [c for c in residue if c in self._rows]:
            factor = residue.get(pivot)
            if not factor:
                continue
            for c, value in self._rows[pivot].items():
                total = residue.get(c, Fraction(0)) - factor * value
                if total:
                    residue[c] = total
                else:
                    residue.pop(c, None)
        return residue

    def add(self, vector: Mapping[int, Fraction]) -> bool:
        """Extend the span by `vector`; False when it already lies in it."""
        residue = self.reduce(vector)
        if not residue:
            return False
        lead = min(residue)
        scale = residue[lead]
        row = {c: value / scale for c, value in residue.items()}
        for other in self._rows.values():
            factor = other.get(lead)
            if factor:
                for c, value in row.items():
                    total = other.get(c, Fraction(0)) - factor * value
                    if total:
                        other[c] = total
                    else:
                        other.pop(c, None)
        self._rows[lead] = row
        return True

    def contains(self, vector: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vector)

    def basis(self) -> List[SparseRow]:
        """The canonical basis of the span, ordered by pivot."""
        return [dict(self._rows[pivot]) for pivot in sorted(self._rows)]


def _as_sparse(vector) -> Mapping[int, Fraction]:
    return vector if isinstance(vector, Mapping) else {c: v for c, v in enumerate(vector) if v}


def span_contains(basis: Iterable, vector) -> bool:
    """Membership of a dense or sparse vector in the span of `basis`."""
    return SparseSpan(_as_sparse(row) for row in basis).contains(_as_sparse(vector))


# ====================================================
# FRACTION-FREE SPARSE ELIMINATION
# ====================================================

def _integer_row(row: Mapping[int, Fraction]) -> IntRow:
    """Clear denominators and divide by the content."""
    entries = {c: Fraction(v) for c, v in row.items() if v}
    if not entries:
        return {}
    common = lcm(*(value.denominator for value in entries.values()))
    ints = {c: int(value * common) for c, value in entries.items()}
    return _primitive(ints)


def _primitive(row: IntRow) -> IntRow:
    content = 0
    for value in row.values():
        content = gcd(content, value)
    if content > 1:
        row = {c: value // content for c, value in row.items()}
    lead = min(row)
    if row[lead] < 0:
        row = {c: -value for c, value in row.items()}
    return row


def echelon_form(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[Tuple[int, IntRow]]:
    """
    Forward elimination column by column. Returns (pivot column, integer row)
    pairs; each row is zero left of its pivot.
    """
    pending = {}
    for row in rows:
        ints = _integer_row(row)
        if ints:
            pending[tuple(sorted(ints.items()))] = ints
    remaining = list(pending.values())
    logger.debug("elimination: %d distinct rows, %d columns", len(remaining), ncols)
    echelon: List[Tuple[int, IntRow]] = []
    for col in range(ncols):
        candidates = [index for index, row in enumerate(remaining) if col in row]
        if not candidates:
            continue
        best = max(candidates, key=lambda index: (abs(remaining[index][col]), -len(remaining[index])))
        pivot_row = remaining[best]
        p = pivot_row[col]
        survivors = []
        for index, row in enumerate(remaining):
            if index == best:
                continue
            q = row.get(col)
            if q:
                combined: IntRow = {}
                for c in set(row) | set(pivot_row):
                    value = p * row.get(c, 0) - q * pivot_row.get(c, 0)
                    if value:
                        combined[c] = value
                if not combined:
                    continue
                row = _primitive(combined)
            survivors.append(row)
        remaining = survivors
        echelon.append((col, pivot_row))
    return echelon


def rank(rows: Sequence, ncols: int) -> int:
    sparse = [row if isinstance(row, Mapping) else {c: v for c, v in enumerate(row) if v} for row in rows]
    return len(echelon_form(sparse, ncols))


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[List[Fraction]]:
    """
    Rational basis of {x : row . x = 0 for every row}, one vector per free
    column (that column set to 1, the other free columns 0), each scaled to a
    primitive integer vector.
    """
    echelon = echelon_form(rows, ncols)
    pivot_cols = {col for col, _ in echelon}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    logger.debug("nullspace: rank %d, nullity %d", len(echelon), len(free_cols))
    basis = []
    for free in free_cols:
        solution: Dict[int, Fraction] = {free: Fraction(1)}
        for col, row in reversed(echelon):
            total = sum((Fraction(value) * solution[c] for c, value in row.items() if c != col and c in solution), Fraction(0))
            if total:
                solution[col] = -total / row[col]
        ints = _integer_row(solution)
        basis.append([Fraction(ints.get(c, 0)) for c in range(ncols)])
    return basis
