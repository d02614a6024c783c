import time
from fractions import Fraction

import pytest

from app.algebra import linalg
from app.algebra.core import (
    apply, apply_sparse, change_of_basis, is_nilpotent, is_null_filiform, is_solvable, lower_central_series,
    make_bilinear_map, nilindex, series, zero_map,
)
from app.algebra.nullfiliform import build_mu0
from app.models import SeriesKind
from app.utils.errors import InputError

from conftest import random_rational


def _random_map(rng, n, density=0.4):
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if rng.random() < density:
                    entries.append((i, j, k, random_rational(rng)))
    return make_bilinear_map(n, entries)


def _random_lower_triangular(rng, n):
    return [
        [random_rational(rng, nonzero=True) if r == c else (random_rational(rng) if c < r else Fraction(0)) for c in range(n)]
        for r in range(n)
    ]


def test_duplicates_are_summed_and_zeros_dropped():
    B = make_bilinear_map(2, [(1, 1, 2, "1/2"), (1, 1, 2, "1/2"), (2, 1, 1, 3), (2, 1, 1, -3)])
    assert B.coeffs == {(1, 1, 2): Fraction(1)}
    assert B.coefficient(2, 1, 1) == 0


def test_index_out_of_range_reports_location():
    with pytest.raises(InputError) as excinfo:
        make_bilinear_map(2, [(1, 1, 2, 1), (1, 3, 1, 1)])
    assert excinfo.value.location == "entries[1].j"


def test_dimension_cap():
    with pytest.raises(InputError):
        zero_map(65)


def test_apply_is_bilinear(rng):
    B = _random_map(rng, 3)
    x = [random_rational(rng) for _ in range(3)]
    y = [random_rational(rng) for _ in range(3)]
    z = [random_rational(rng) for _ in range(3)]
    lhs = apply(B, [a + b for a, b in zip(x, z)], y)
    rhs = [a + b for a, b in zip(apply(B, x, y), apply(B, z, y))]
    assert list(lhs) == rhs


def test_apply_rejects_wrong_length():
    with pytest.raises(InputError):
        apply(build_mu0(3), [1, 0], [0, 1, 0])


@pytest.mark.parametrize("n", range(1, 11))
def test_mu0_is_null_filiform(n):
    dot = build_mu0(n)
    assert is_null_filiform(dot)
    assert series(dot, SeriesKind.POWER).dims == tuple(range(n, -1, -1))
    assert nilindex(dot) == n + 1


def test_power_series_stalls_for_non_nilpotent_product():
    # e1 * e1 = e1
    B = make_bilinear_map(2, [(1, 1, 1, 1)])
    assert nilindex(B) is None
    assert not is_nilpotent(B)
    assert not is_null_filiform(B)


def test_lower_central_and_derived_series_of_two_dim_nonabelian_lie():
    # [e1, e2] = e2
    bracket = make_bilinear_map(2, [(1, 2, 2, 1), (2, 1, 2, -1)])
    assert lower_central_series(bracket).dims == (2, 1)
    assert not lower_central_series(bracket).reaches_zero
    assert series(bracket, SeriesKind.DERIVED).dims == (2, 1, 0)
    assert is_solvable(bracket)


def test_change_of_basis_identity_is_noop(rng):
    B = _random_map(rng, 4)
    assert change_of_basis(B, linalg.identity(4)) == B


def test_change_of_basis_is_a_right_action(rng):
    for _ in range(5):
        B = _random_map(rng, 3)
        P = _random_lower_triangular(rng, 3)
        Q = _random_lower_triangular(rng, 3)
        assert change_of_basis(change_of_basis(B, Q), P) == change_of_basis(B, linalg.matmul(Q, P))


def test_change_of_basis_singular_matrix():
    with pytest.raises(InputError):
        change_of_basis(build_mu0(2), [[1, 0], [2, 0]])


def test_change_of_basis_wrong_shape():
    with pytest.raises(InputError):
        change_of_basis(build_mu0(3), linalg.identity(2))


def test_nullspace_and_rank():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {1: Fraction(1), 2: Fraction(-1, 2)}]
    basis = linalg.nullspace(rows, 3)
    assert len(basis) == 1
    assert linalg.rank(rows, 3) == 2
    for row in rows:
        assert sum(row.get(c, 0) * basis[0][c] for c in range(3)) == 0


def test_inverse_round_trip(rng):
    P = _random_lower_triangular(rng, 4)
    assert linalg.matmul(P, linalg.inverse(P)) == linalg.identity(4)


def test_inverse_of_singular_matrix():
    with pytest.raises(InputError) as excinfo:
        linalg.inverse([[1, 2], [2, 4]])
    assert excinfo.value.location == "P"


def test_is_invertible():
    assert linalg.is_invertible([[0, 1], [1, 0]])
    assert not linalg.is_invertible([[1, 2], [2, 4]])
    assert not linalg.is_invertible([[1, 0, 0], [0, 1, 0]])


# ====================================================
# SPANS
# ====================================================

def test_sparse_span_keeps_reduced_echelon_basis():
    span = linalg.SparseSpan([{1: Fraction(1), 2: Fraction(2)}, {2: Fraction(1), 3: Fraction(1)}])
    assert span.rank == 2
    assert span.basis() == [{1: 1, 3: -2}, {2: 1, 3: 1}]
    assert not span.add({1: Fraction(2), 2: Fraction(4)})
    assert span.contains({1: Fraction(1), 2: Fraction(3), 3: Fraction(1)})
    assert not span.contains({3: Fraction(1)})


def test_span_contains_dense_vectors():
    basis = [[1, 2, 0], [0, 1, 1]]
    assert linalg.span_contains(basis, [1, 3, 1])
    assert not linalg.span_contains(basis, [0, 0, 1])
    assert linalg.span_contains([], [0, 0, 0])


# ====================================================
# SERIES AGAINST THE DEFINITIONS
# ====================================================

def _reference_dims(B, kind):
    """Every term built from all of its defining products, no shortcuts."""
    n = B.dim
    whole = [{k: Fraction(1)} for k in range(1, n + 1)]
    chain = [whole]
    while chain[-1] and len(chain) <= n + 1:
        i = len(chain)
        if kind is SeriesKind.POWER:
            blocks = [(chain[k - 1], chain[i - k]) for k in range(1, i + 1)]
        elif kind is SeriesKind.DERIVED:
            blocks = [(chain[-1], chain[-1])]
        else:
            blocks = [(whole, chain[-1])]
        span = linalg.SparseSpan(apply_sparse(B, u, v) for left, right in blocks for u in left for v in right)
        following = span.basis()
        if following == chain[-1]:
            break
        chain.append(following)
    return tuple(len(basis) for basis in chain)


def _random_graded_map(rng, n, density):
    # products only land above both factors, so the power series has room to descend
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(max(i, j) + 1, n + 1):
                if rng.random() < density:
                    entries.append((i, j, k, random_rational(rng)))
    return make_bilinear_map(n, entries)


@pytest.mark.parametrize("kind", list(SeriesKind))
def test_series_matches_definition(rng, kind):
    for _ in range(15):
        n = rng.randint(2, 6)
        for B in (_random_map(rng, n, density=0.15), _random_graded_map(rng, n, density=0.3)):
            assert series(B, kind).dims == _reference_dims(B, kind)


def test_series_bases_are_reduced_echelon(rng):
    B = _random_graded_map(rng, 5, density=0.4)
    chain = series(B, SeriesKind.POWER)
    for basis, dim in zip(chain.bases, chain.dims):
        assert len(basis) == dim
        pivots = [next(c for c, value in enumerate(row) if value) for row in basis]
        assert pivots == sorted(set(pivots))
        for row, pivot in zip(basis, pivots):
            assert row[pivot] == 1
            assert all(other[pivot] == 0 for other in basis if other is not row)


def test_mu0_series_at_construction_cap():
    start = time.perf_counter()
    assert is_null_filiform(build_mu0(64))
    assert time.perf_counter() - start < 30
