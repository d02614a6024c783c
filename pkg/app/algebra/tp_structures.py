"""
Brackets compatible with mu_0^n.

`build_tp_bracket` writes down the TP(alpha_2, ..., alpha_n) family:

    [e_i, e_j] = (j - i) * sum_{t=i+j-1}^{n} alpha_{t-i-j+3} e_t,   3 <= i+j <= n+1

`solve_bracket_space` re-derives all compatible brackets independently: it
assembles the linear system of an identity over the unknown structure
constants b[i][j][k] (i < j, antisymmetry fixing the rest), takes the exact
nullspace, and then evaluates Jacobi on the general nullspace element,
returning the resulting polynomial constraints.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

import sympy

from ..models import AlphaParams, BilinearMap, OracleComparison, SolutionSpace, SolveMode
from ..shared.config import settings
from ..utils.errors import ErrorHandler, ErrorMessages
from . import linalg
from .core import make_bilinear_map
from .nullfiliform import build_mu0

logger = logging.getLogger(__name__)

Unknown = Tuple[int, int, int]
# component m -> {unknown column -> coefficient}
LinearVector = Dict[int, Dict[int, Fraction]]


# ====================================================
# THE TP FAMILY
# ====================================================

def build_tp_bracket(params: AlphaParams) -> BilinearMap:
    if not params.is_classified:
        raise ErrorHandler.validation_error(ErrorMessages.ALPHA1_PRESENT, location="alpha1")
    n = params.n
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or not 3 <= i + j <= n + 1:
                continue
            for t in range(i + j - 1, n + 1):
                entries.append((i, j, t, (j - i) * params.value(t - i - j + 3)))
    return make_bilinear_map(n, entries)


def build_extended_bracket(params: AlphaParams) -> BilinearMap:
    """
    The pre-Jacobi form with the alpha_1 slot, summing from t = i+j-2:
    [e_i, e_j] = (j - i) * sum_{t=i+j-2}^{n} alpha_{t-i-j+3} e_t.
    With alpha_1 = 0 it coincides with build_tp_bracket.
    """
    n = params.n
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for t in range(max(1, i + j - 2), n + 1):
                entries.append((i, j, t, (j - i) * params.value(t - i - j + 3)))
    return make_bilinear_map(n, entries)


def tp_indicator_basis(n: int) -> Tuple[BilinearMap, ...]:
    return tuple(build_tp_bracket(AlphaParams.indicator(n, t)) for t in range(2, n + 1))


def extract_alphas(bracket: BilinearMap) -> AlphaParams:
    """Read [e_1, e_2] as sum alpha_t e_t and check the bracket is TP(alpha)."""
    n = bracket.dim
    ErrorHandler.validate_dimension(n, settings.max_dim, minimum=2)
    alpha1 = bracket.coefficient(1, 2, 1)
    if alpha1:
        raise ErrorHandler.not_in_family_error(1, 2, 1, Fraction(0), alpha1)
    params = AlphaParams(n, tuple(bracket.coefficient(1, 2, t) for t in range(2, n + 1)))
    expected = build_tp_bracket(params)
    for key in sorted(set(expected.coeffs) | set(bracket.coeffs)):
        want, found = expected.coefficient(*key), bracket.coefficient(*key)
        if want != found:
            raise ErrorHandler.not_in_family_error(*key, want, found)
    return params


# ====================================================
# LINEAR SYSTEM
# ====================================================

def unknown_index(n: int) -> Dict[Unknown, int]:
    """Columns for b[i][j][k] with i < j"""
    keys = [(i, j, k) for i in range(1, n + 1) for j in range(i + 1, n + 1) for k in range(1, n + 1)]
    return {key: column for column, key in enumerate(keys)}


def _symbolic_bracket(columns: Mapping[Unknown, int], n: int, i: int, j: int) -> LinearVector:
    """[e_i, e_j] in terms of the unknowns"""
    if i == j:
        return {}
    sign = Fraction(1) if i < j else Fraction(-1)
    low, high = min(i, j), max(i, j)
    return {k: {columns[(low, high, k)]: sign} for k in range(1, n + 1)}


def _add_linear(target: LinearVector, source: LinearVector, scale: Fraction) -> None:
    if not scale:
        return
    for m, form in source.items():
        row = target.setdefault(m, {})
        for column, value in form.items():
            total = row.get(column, Fraction(0)) + scale * value
            if total:
                row[column] = total
            else:
                row.pop(column, None)


def _bracket_vector(columns, n: int, vector: Mapping[int, Fraction], j: int, left: bool) -> LinearVector:
    """[vector, e_j] when left is True, else [e_j, vector]"""
    result: LinearVector = {}
    for p, value in vector.items():
        pair = (p, j) if left else (j, p)
        _add_linear(result, _symbolic_bracket(columns, n, *pair), value)
    return result


def _dot_linear(dot: BilinearMap, c: int, form: LinearVector, left: bool) -> LinearVector:
    """e_c . form when left is True, else form . e_c"""
    result: LinearVector = {}
    for m, row in form.items():
        image = dot.product(c, m) if left else dot.product(m, c)
        for k, value in image.items():
            _add_linear(result, {k: row}, value)
    return result


def assemble_identity_system(dot: BilinearMap, mode: SolveMode) -> Tuple[Dict[Unknown, int], List[Dict[int, Fraction]]]:
    """
    Rows of the linear system that the chosen identity imposes on the bracket
    unknowns, one per basis triple (x, y, z) = (e_a, e_b, e_c) and output
    component. Generic over the product.
    """
    mode = SolveMode(mode)
    n = dot.dim
    columns = unknown_index(n)
    rows: List[Dict[int, Fraction]] = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                residual: LinearVector = {}
                if mode is SolveMode.TRANSPOSED:
                    # 2 z.[x,y] - [z.x, y] - [x, z.y]
                    _add_linear(residual, _dot_linear(dot, c, _symbolic_bracket(columns, n, a, b), left=True), Fraction(2))
                    _add_linear(residual, _bracket_vector(columns, n, dot.product(c, a), b, left=True), Fraction(-1))
                    _add_linear(residual, _bracket_vector(columns, n, dot.product(c, b), a, left=False), Fraction(-1))
                else:
                    # [x, y.z] - [x,y].z - y.[x,z]
                    _add_linear(residual, _bracket_vector(columns, n, dot.product(b, c), a, left=False), Fraction(1))
                    _add_linear(residual, _dot_linear(dot, c, _symbolic_bracket(columns, n, a, b), left=False), Fraction(-1))
                    _add_linear(residual, _dot_linear(dot, b, _symbolic_bracket(columns, n, a, c), left=True), Fraction(-1))
                rows.extend(form for form in residual.values() if form)
    return columns, rows


# ====================================================
# SOLVER
# ====================================================

def _bracket_from_solution(n: int, columns: Mapping[Unknown, int], vector: Sequence[Fraction]) -> BilinearMap:
    entries = []
    for (i, j, k), column in columns.items():
        value = vector[column]
        if value:
            entries.append((i, j, k, value))
            entries.append((j, i, k, -value))
    return make_bilinear_map(n, entries)


def solve_bracket_space(n: int, mode: SolveMode) -> SolutionSpace:
    ErrorHandler.validate_dimension(n, settings.max_solve_dim, minimum=settings.min_solve_dim)
    try:
        mode = SolveMode(mode)
    except ValueError:
        raise ErrorHandler.validation_error(f"Unknown solve mode {mode!r}. Use 'transposed' or 'poisson'.", "mode")
    columns, rows = assemble_identity_system(build_mu0(n), mode)
    null = linalg.nullspace(rows, len(columns))
    basis = tuple(_bracket_from_solution(n, columns, vector) for vector in null)
    constraints = jacobi_constraints(n, basis)
    logger.debug(
        "solve n=%d mode=%s: %d unknowns, %d rows, nullity %d, %d Jacobi constraints",
        n, mode.value, len(columns), len(rows), len(basis), len(constraints),
    )
    return SolutionSpace(
        n=n,
        mode=mode,
        basis=basis,
        residual_constraints=constraints,
        unknowns=len(columns),
        rank=len(columns) - len(basis),
    )


def coordinate_symbols(count: int) -> Tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f"c1:{count + 1}")) if count else ()


def jacobi_constraints(n: int, basis: Sequence[BilinearMap], symbols: Sequence[sympy.Symbol] = None) -> Tuple[sympy.Expr, ...]:
    """
    Jacobi on the general element sum c_r basis[r]: every nonzero component
    of every increasing-triple residual, made monic, deduplicated and sorted.
    """
    if not basis:
        return ()
    symbols = tuple(symbols) if symbols is not None else coordinate_symbols(len(basis))
    zero = sympy.Poly(0, *symbols, domain="QQ")
    general: Dict[Tuple[int, int], Dict[int, sympy.Poly]] = {}
    for symbol, element in zip(symbols, basis):
        term = sympy.Poly(symbol, *symbols, domain="QQ")
        for (i, j, k), value in element.coeffs.items():
            row = general.setdefault((i, j), {})
            row[k] = row.get(k, zero) + term * sympy.Rational(value.numerator, value.denominator)

    def bracket_of(left: Mapping[int, sympy.Poly], j: int) -> Dict[int, sympy.Poly]:
        result: Dict[int, sympy.Poly] = {}
        for m, coefficient in left.items():
            for k, value in general.get((m, j), {}).items():
                result[k] = result.get(k, zero) + coefficient * value
        return result

    found = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                total: Dict[int, sympy.Poly] = {}
                for (a, b), c in (((i, j), k), ((j, k), i), ((k, i), j)):
                    for m, value in bracket_of(general.get((a, b), {}), c).items():
                        total[m] = total.get(m, zero) + value
                for value in total.values():
                    if not value.is_zero:
                        found.add(value.monic().as_expr())
    return tuple(sorted(found, key=sympy.default_sort_key))


# ====================================================
# ORACLE COMPARISON
# ====================================================

def _flatten(bracket: BilinearMap, columns: Mapping[Unknown, int]) -> List[Fraction]:
    vector = [Fraction(0)] * len(columns)
    for (i, j, k), column in columns.items():
        vector[column] = bracket.coefficient(i, j, k)
    return vector


def compare_with_tp_family(space: SolutionSpace) -> OracleComparison:
    """
    Check that the Jacobi-constrained solution set equals the span of the TP
    indicator brackets: the family lies in the nullspace, Jacobi vanishes
    identically on the family, and any extra nullspace directions are forced
    to zero by the Jacobi constraints (radical membership via Groebner bases).
    """
    n = space.n
    columns = unknown_index(n)
    family = tp_indicator_basis(n)
    family_vectors = [_flatten(bracket, columns) for bracket in family]
    space_vectors = [_flatten(bracket, columns) for bracket in space.basis]
    width = len(columns)
    space_rank = linalg.rank(space_vectors, width)
    family_rank = linalg.rank(family_vectors, width)
    contained = all(linalg.span_contains(space_vectors, vector) for vector in family_vectors)
    vanishes = not jacobi_constraints(n, family)
    extra = space_rank - family_rank
    forced = extra <= 0
    if contained and extra > 0:
        # adapted coordinates: family first, then complementary solution directions
        adapted = list(family)
        adapted_vectors = list(family_vectors)
        for bracket, vector in zip(space.basis, space_vectors):
            if not linalg.span_contains(adapted_vectors, vector):
                adapted.append(bracket)
                adapted_vectors.append(vector)
        symbols = coordinate_symbols(len(adapted))
        constraints = jacobi_constraints(n, adapted, symbols)
        complement = symbols[len(family):]
        forced = bool(constraints) and all(_in_radical(constraints, symbol, symbols) for symbol in complement)
        logger.debug("oracle n=%d: %d extra directions, forced to zero: %s", n, extra, forced)
    return OracleComparison(
        n=n,
        nullspace_dimension=space_rank,
        family_dimension=family_rank,
        family_contained=contained,
        jacobi_vanishes_on_family=vanishes,
        extra_dimension=extra,
        extra_forced_zero=forced,
    )


def _in_radical(constraints: Sequence[sympy.Expr], target: sympy.Symbol, symbols: Sequence[sympy.Symbol]) -> bool:
    """target vanishes on the variety of `constraints` iff 1 is in (constraints, 1 - y*target)."""
    y = sympy.Dummy("y")
    basis = sympy.groebner(list(constraints) + [1 - y * target], *symbols, y, order="grevlex")
    return list(basis.exprs) == [1]
