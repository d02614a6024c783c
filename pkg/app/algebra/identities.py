"""
Polynomial identities of a product, a bracket, or a (product, bracket) pair.

Every identity here is multilinear, so it holds on the whole space exactly
when it holds on all basis pairs or triples; the checks below only visit
those. The residual functions take sparse vectors and are also used on
arbitrary vectors by the tests.
"""
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, Mapping, Sequence, Tuple

from ..models import AlgebraPair, BilinearMap, IdentityName, IdentityReport, IdentityWitness, SparseVector, Vector
from .core import add_into, apply_sparse, to_dense, to_sparse

Sparse = Mapping[int, Fraction]

TWO = Fraction(2)


def _unit(i: int) -> SparseVector:
    return {i: Fraction(1)}


def _combine(*terms: Tuple[Fraction, Sparse]) -> SparseVector:
    result: SparseVector = {}
    for scale, vector in terms:
        add_into(result, vector, scale)
    return result


# ====================================================
# RESIDUALS
# ====================================================

def commutativity_residual(dot: BilinearMap, x: Sparse, y: Sparse) -> SparseVector:
    return _combine((1, apply_sparse(dot, x, y)), (-1, apply_sparse(dot, y, x)))


def associativity_residual(dot: BilinearMap, x: Sparse, y: Sparse, z: Sparse) -> SparseVector:
    left = apply_sparse(dot, apply_sparse(dot, x, y), z)
    right = apply_sparse(dot, x, apply_sparse(dot, y, z))
    return _combine((1, left), (-1, right))


def antisymmetry_residual(bracket: BilinearMap, x: Sparse, y: Sparse) -> SparseVector:
    return _combine((1, apply_sparse(bracket, x, y)), (1, apply_sparse(bracket, y, x)))


def jacobi_residual_sparse(bracket: BilinearMap, x: Sparse, y: Sparse, z: Sparse) -> SparseVector:
    """[[x,y],z] + [[y,z],x] + [[z,x],y]"""
    return _combine(
        (1, apply_sparse(bracket, apply_sparse(bracket, x, y), z)),
        (1, apply_sparse(bracket, apply_sparse(bracket, y, z), x)),
        (1, apply_sparse(bracket, apply_sparse(bracket, z, x), y)),
    )


def jacobi_residual(bracket: BilinearMap, i: int, j: int, k: int) -> Vector:
    """Jacobi residual on the basis triple (e_i, e_j, e_k)"""
    return to_dense(jacobi_residual_sparse(bracket, _unit(i), _unit(j), _unit(k)), bracket.dim)


def leibniz_residual(pair: AlgebraPair, x: Sparse, y: Sparse, z: Sparse) -> SparseVector:
    """[x, y.z] - [x,y].z - y.[x,z]"""
    dot, bracket = pair.dot, pair.bracket
    return _combine(
        (1, apply_sparse(bracket, x, apply_sparse(dot, y, z))),
        (-1, apply_sparse(dot, apply_sparse(bracket, x, y), z)),
        (-1, apply_sparse(dot, y, apply_sparse(bracket, x, z))),
    )


def transposed_leibniz_residual(pair: AlgebraPair, x: Sparse, y: Sparse, z: Sparse) -> SparseVector:
    """2 z.[x,y] - [z.x, y] - [x, z.y]"""
    dot, bracket = pair.dot, pair.bracket
    return _combine(
        (TWO, apply_sparse(dot, z, apply_sparse(bracket, x, y))),
        (-1, apply_sparse(bracket, apply_sparse(dot, z, x), y)),
        (-1, apply_sparse(bracket, x, apply_sparse(dot, z, y))),
    )


def mixed_residuals(pair: AlgebraPair, x: Sparse, y: Sparse, z: Sparse) -> Tuple[SparseVector, SparseVector]:
    """(x.[y,z], [x.y, z]); both vanish when the pair is Poisson and transposed Poisson"""
    dot, bracket = pair.dot, pair.bracket
    return (
        apply_sparse(dot, x, apply_sparse(bracket, y, z)),
        apply_sparse(bracket, apply_sparse(dot, x, y), z),
    )


def identity_residual(name: IdentityName, pair: AlgebraPair, *vectors: Sequence) -> Vector:
    """
    Residual of an identity on arbitrary dense vectors (two for the binary
    identities, three otherwise). mixed_trivial returns both residuals
    concatenated.
    """
    name = IdentityName(name)
    sparse = [to_sparse(vector) for vector in vectors]
    n = pair.dim
    if name is IdentityName.COMMUTATIVE:
        return to_dense(commutativity_residual(pair.dot, *sparse[:2]), n)
    if name is IdentityName.ANTISYMMETRIC:
        return to_dense(antisymmetry_residual(pair.bracket, *sparse[:2]), n)
    if name is IdentityName.ASSOCIATIVE:
        return to_dense(associativity_residual(pair.dot, *sparse), n)
    if name is IdentityName.JACOBI:
        return to_dense(jacobi_residual_sparse(pair.bracket, *sparse), n)
    if name is IdentityName.LEIBNIZ:
        return to_dense(leibniz_residual(pair, *sparse), n)
    if name is IdentityName.TRANSPOSED_LEIBNIZ:
        return to_dense(transposed_leibniz_residual(pair, *sparse), n)
    first, second = mixed_residuals(pair, *sparse)
    return to_dense(first, n) + to_dense(second, n)


# ====================================================
# BASIS CHECKS
# ====================================================

def _scan(
    name: IdentityName, dim: int, arity: int, residual: Callable[..., SparseVector], alternating: bool = False
) -> Tuple[bool, Tuple[IdentityWitness, ...]]:
    """Visit basis tuples in lexicographic order and stop at the first failure."""
    indices_range = range(1, dim + 1)
    tuples = combinations(indices_range, arity) if alternating else product(indices_range, repeat=arity)
    for indices in tuples:
        value = residual(*(_unit(i) for i in indices))
        if value:
            return False, (IdentityWitness(name, indices, to_dense(value, dim)),)
    return True, ()


def check_product(dot: BilinearMap) -> IdentityReport:
    n = dot.dim
    commutative, w1 = _scan(IdentityName.COMMUTATIVE, n, 2, lambda x, y: commutativity_residual(dot, x, y))
    associative, w2 = _scan(IdentityName.ASSOCIATIVE, n, 3, lambda x, y, z: associativity_residual(dot, x, y, z))
    return IdentityReport(commutative=commutative, associative=associative, witnesses=w1 + w2)


def check_bracket(bracket: BilinearMap) -> IdentityReport:
    n = bracket.dim
    antisymmetric, w1 = _scan(IdentityName.ANTISYMMETRIC, n, 2, lambda x, y: antisymmetry_residual(bracket, x, y))
    # under antisymmetry the Jacobi sum is alternating, so increasing triples suffice
    jacobi, w2 = _scan(
        IdentityName.JACOBI, n, 3, lambda x, y, z: jacobi_residual_sparse(bracket, x, y, z), alternating=antisymmetric
    )
    return IdentityReport(antisymmetric=antisymmetric, jacobi=jacobi, witnesses=w1 + w2)


def _mixed_scan(pair: AlgebraPair) -> Tuple[bool, Tuple[IdentityWitness, ...]]:
    n = pair.dim
    for indices in product(range(1, n + 1), repeat=3):
        for value in mixed_residuals(pair, *(_unit(i) for i in indices)):
            if value:
                return False, (IdentityWitness(IdentityName.MIXED_TRIVIAL, indices, to_dense(value, n)),)
    return True, ()


def check_compat(pair: AlgebraPair) -> IdentityReport:
    n = pair.dim
    leibniz, w1 = _scan(IdentityName.LEIBNIZ, n, 3, lambda x, y, z: leibniz_residual(pair, x, y, z))
    transposed, w2 = _scan(
        IdentityName.TRANSPOSED_LEIBNIZ, n, 3, lambda x, y, z: transposed_leibniz_residual(pair, x, y, z)
    )
    mixed, w3 = _mixed_scan(pair)
    return IdentityReport(leibniz=leibniz, transposed_leibniz=transposed, mixed_trivial=mixed, witnesses=w1 + w2 + w3)


def check_all(pair: AlgebraPair) -> IdentityReport:
    return check_product(pair.dot).merge(check_bracket(pair.bracket)).merge(check_compat(pair))


# ====================================================
# STRUCTURES
# ====================================================

def _base_flags(report: IdentityReport) -> bool:
    return bool(report.commutative and report.associative and report.antisymmetric and report.jacobi)


def is_poisson(pair: AlgebraPair, report: IdentityReport = None) -> bool:
    report = report or check_all(pair)
    return _base_flags(report) and bool(report.leibniz)


def is_transposed_poisson(pair: AlgebraPair, report: IdentityReport = None) -> bool:
    report = report or check_all(pair)
    return _base_flags(report) and bool(report.transposed_leibniz)


def structure_flags(pair: AlgebraPair, report: IdentityReport = None) -> Dict[str, bool]:
    report = report or check_all(pair)
    return {
        "poisson": is_poisson(pair, report),
        "transposed_poisson": is_transposed_poisson(pair, report),
    }
