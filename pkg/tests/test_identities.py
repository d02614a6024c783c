from fractions import Fraction

import pytest

from app.algebra.core import make_bilinear_map, zero_map
from app.algebra.identities import (
    check_all, check_bracket, check_product, identity_residual, is_poisson, is_transposed_poisson,
    jacobi_residual, structure_flags,
)
from app.algebra.nullfiliform import build_mu0
from app.algebra.tp_structures import build_tp_bracket, solve_bracket_space
from app.models import AlgebraPair, AlphaParams, IdentityName, SolveMode
from app.utils.errors import InputError

from conftest import random_alpha, random_rational


def test_mu0_product_flags():
    report = check_product(build_mu0(5))
    assert report.commutative and report.associative
    assert report.witnesses == ()


def test_non_commutative_product_has_witness():
    dot = make_bilinear_map(2, [(1, 2, 1, 1)])
    report = check_product(dot)
    assert report.commutative is False
    witness = report.witnesses[0]
    assert witness.identity is IdentityName.COMMUTATIVE
    assert witness.basis == (1, 2)
    assert witness.residual == (Fraction(1), Fraction(0))


def test_non_antisymmetric_bracket():
    bracket = make_bilinear_map(2, [(1, 1, 2, 1)])
    report = check_bracket(bracket)
    assert report.antisymmetric is False
    assert "antisymmetric" in report.failed()


def test_jacobi_failure_is_detected():
    # antisymmetric but not Lie: [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1
    entries = []
    for i, j, k in ((1, 2, 3), (2, 3, 1), (1, 3, 1)):
        entries += [(i, j, k, 1), (j, i, k, -1)]
    report = check_bracket(make_bilinear_map(3, entries))
    assert report.antisymmetric
    assert report.jacobi is False
    assert report.witnesses[0].basis == (1, 2, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_tp_family_is_transposed_poisson(rng, n):
    for _ in range(100):
        pair = AlgebraPair(dot=build_mu0(n), bracket=build_tp_bracket(random_alpha(rng, n)))
        report = check_all(pair)
        assert report.antisymmetric and report.jacobi and report.transposed_leibniz
        assert is_transposed_poisson(pair, report)


def test_nonzero_tp_bracket_is_not_poisson():
    pair = AlgebraPair(dot=build_mu0(4), bracket=build_tp_bracket(AlphaParams.of(4, [1, 0, 0])))
    flags = structure_flags(pair)
    assert flags == {"poisson": False, "transposed_poisson": True}
    assert check_all(pair).mixed_trivial is False


def test_zero_bracket_is_both():
    pair = AlgebraPair(dot=build_mu0(4), bracket=zero_map(4))
    report = check_all(pair)
    assert report.mixed_trivial
    assert is_poisson(pair, report) and is_transposed_poisson(pair, report)


def test_residuals_vanish_on_arbitrary_vectors(rng):
    n = 5
    pair = AlgebraPair(dot=build_mu0(n), bracket=build_tp_bracket(random_alpha(rng, n)))
    x, y, z = ([random_rational(rng) for _ in range(n)] for _ in range(3))
    for name in (IdentityName.JACOBI, IdentityName.TRANSPOSED_LEIBNIZ, IdentityName.ASSOCIATIVE):
        assert not any(identity_residual(name, pair, x, y, z))
    assert not any(identity_residual(IdentityName.ANTISYMMETRIC, pair, x, y))
    assert not any(identity_residual(IdentityName.COMMUTATIVE, pair, x, y))


def test_jacobi_residual_of_lie_bracket_is_zero():
    bracket = build_tp_bracket(AlphaParams.of(4, [2, -1, 3]))
    assert jacobi_residual(bracket, 1, 2, 3) == (0, 0, 0, 0)


def test_pair_dimension_mismatch():
    with pytest.raises(InputError):
        AlgebraPair(dot=build_mu0(3), bracket=zero_map(2))


def test_tp_bracket_on_mu0_5_fails_leibniz_and_mixed():
    pair = AlgebraPair(dot=build_mu0(5), bracket=build_tp_bracket(AlphaParams.of(5, [0, 1, 0, 0])))
    report = check_all(pair)
    assert report.transposed_leibniz
    assert report.leibniz is False
    assert report.mixed_trivial is False


def test_bracket_outside_family_fails_transposed_leibniz():
    # [e1, e2] = e1 on mu_0^3
    bracket = make_bilinear_map(3, [(1, 2, 1, 1), (2, 1, 1, -1)])
    report = check_all(AlgebraPair(dot=build_mu0(3), bracket=bracket))
    assert report.antisymmetric and report.jacobi
    assert report.transposed_leibniz is False


# ====================================================
# SOLVED SPACES
# ====================================================

@pytest.mark.parametrize("n", range(2, 7))
def test_both_structures_iff_mixed_trivial_iff_zero(rng, n):
    space = solve_bracket_space(n, SolveMode.TRANSPOSED)
    candidates = [zero_map(n)] + list(space.basis)
    for _ in range(5):
        entries = []
        for element in space.basis:
            scale = random_rational(rng)
            entries += [(i, j, k, scale * value) for i, j, k, value in element.entries()]
        candidates.append(make_bilinear_map(n, entries))
    for bracket in candidates:
        pair = AlgebraPair(dot=build_mu0(n), bracket=bracket)
        report = check_all(pair)
        both = is_poisson(pair, report) and is_transposed_poisson(pair, report)
        assert both == bool(report.mixed_trivial) == bracket.is_zero


# ====================================================
# BASIS CHECKS AGAINST RANDOM VECTORS
# ====================================================

BINARY = (IdentityName.COMMUTATIVE, IdentityName.ANTISYMMETRIC)


def _random_map(rng, n, density, antisymmetric=False):
    entries = []
    for i in range(1, n + 1):
        for j in range(i if antisymmetric else 1, n + 1):
            for k in range(1, n + 1):
                if (i == j and antisymmetric) or rng.random() >= density:
                    continue
                value = random_rational(rng, nonzero=True)
                entries.append((i, j, k, value))
                if antisymmetric:
                    entries.append((j, i, k, -value))
    return make_bilinear_map(n, entries)


def _random_pairs(rng, n):
    yield AlgebraPair(dot=build_mu0(n), bracket=build_tp_bracket(random_alpha(rng, n)))
    yield AlgebraPair(dot=build_mu0(n), bracket=zero_map(n))
    for _ in range(12):
        dot = build_mu0(n) if rng.random() < 0.3 else _random_map(rng, n, 0.2)
        bracket = _random_map(rng, n, rng.choice((0.1, 0.3)), antisymmetric=rng.random() < 0.7)
        yield AlgebraPair(dot=dot, bracket=bracket)


def test_basis_flags_agree_with_random_vectors(rng):
    n = 3
    failures = 0
    for pair in _random_pairs(rng, n):
        report = check_all(pair)
        for name, holds in report.flags().items():
            identity = IdentityName(name)
            arity = 2 if identity in BINARY else 3
            residuals = [
                identity_residual(identity, pair, *([random_rational(rng, bound=1000) for _ in range(n)] for _ in range(arity)))
                for _ in range(3)
            ]
            if holds:
                assert not any(any(residual) for residual in residuals), name
            else:
                failures += 1
                assert any(any(residual) for residual in residuals), name
        for witness in report.witnesses:
            units = [[Fraction(int(c == index)) for c in range(1, n + 1)] for index in witness.basis]
            assert any(identity_residual(witness.identity, pair, *units))
    assert failures > 0
