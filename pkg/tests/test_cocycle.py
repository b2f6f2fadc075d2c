"""Tests for two-cocycles."""

import random

from hypothesis import given, settings, strategies as st
import pytest

from helpers import perm, unit_transposition
from tgha.catalog import diagonal_group
from tgha.classify import classify_all
from tgha.cocycle import (
    CliffordElement,
    coboundary_from,
    cocycle_from_table,
    commutator_ratio,
    elementary_abelian_cocycle,
    is_alpha_regular,
    random_beta,
    transposition_factors,
    trivial_cocycle,
    verify_cocycle,
)
from tgha.cyclo import root_of_unity
from tgha.exceptions import NotACocycle, NotNormalized, NotRootOfUnity, WrongGroupShape


def _table(alpha):
    group = alpha.group
    return {(g, h): alpha(g, h) for g in range(group.order) for h in range(group.order)}


def test_builtin_cocycles_verify(diag33, diag33_alpha, s4, s4_cover):
    for alpha in (trivial_cocycle(diag33), diag33_alpha, trivial_cocycle(s4), s4_cover):
        report = verify_cocycle(alpha)
        assert report.triples_checked == alpha.group.order**3


def test_altered_entry_is_not_a_cocycle(diag33):
    g1, g2 = diag33.generators
    values = _table(trivial_cocycle(diag33))
    values[(g1, g2)] = root_of_unity(3, 1)
    with pytest.raises(NotACocycle) as excinfo:
        verify_cocycle(cocycle_from_table(diag33, values))
    assert len(excinfo.value.triple) == 3


def test_normalization_and_finite_order(diag33):
    g1, g2 = diag33.generators
    values = _table(trivial_cocycle(diag33))
    values[(0, g1)] = root_of_unity(3, 1)
    with pytest.raises(NotNormalized) as excinfo:
        verify_cocycle(cocycle_from_table(diag33, values))
    assert excinfo.value.pair == (0, g1)

    values = _table(trivial_cocycle(diag33))
    values[(g1, g2)] = root_of_unity(3, 1) * 2
    with pytest.raises(NotRootOfUnity):
        verify_cocycle(cocycle_from_table(diag33, values))


def test_elementary_abelian_values(diag33, diag33_alpha):
    g1, g2 = diag33.generators
    q = root_of_unity(3, 1)
    assert all(diag33_alpha(0, g) == 1 for g in range(diag33.order))
    assert diag33_alpha(g1, g2) == q.inverse()
    assert diag33_alpha(g2, g1) == 1
    assert commutator_ratio(diag33_alpha, g2, g1) == q


def test_elementary_abelian_needs_diagonal_group(s4):
    with pytest.raises(WrongGroupShape):
        elementary_abelian_cocycle(s4)


def test_coboundaries(diag33):
    assert coboundary_from(diag33, [1] * diag33.order).is_trivial()
    rng = random.Random(7)
    alpha = coboundary_from(diag33, random_beta(diag33, rng))
    verify_cocycle(alpha)
    for g in range(diag33.order):
        for h in range(diag33.order):
            assert alpha(g, h) == alpha(h, g)


def test_coboundary_is_normalized(plus_minus):
    """beta is rescaled so beta(1) = 1 before the coboundary is formed."""
    alpha = coboundary_from(plus_minus, [2, 2])
    assert alpha.is_trivial()
    alpha = coboundary_from(plus_minus, [1, -1])
    verify_cocycle(alpha)
    assert alpha(1, 1) == -1


def test_symmetric_group_cocycle(s4, s4_cover):
    t12, t34 = perm(s4, [1, 0, 2, 3]), perm(s4, [0, 1, 3, 2])
    g = perm(s4, [1, 0, 3, 2])
    assert all(s4_cover(0, h) == 1 for h in range(s4.order))
    assert commutator_ratio(s4_cover, t12, t34) == -1
    assert commutator_ratio(s4_cover, t12, g) == -1
    assert all(v == 1 or v == -1 for row in s4_cover.table for v in row)
    assert any(v == -1 for row in s4_cover.table for v in row)


def test_alpha_regularity(s4, s4_cover, s4_trivial):
    assert is_alpha_regular(s4_cover, perm(s4, [1, 2, 0, 3]))
    assert not is_alpha_regular(s4_cover, perm(s4, [1, 0, 3, 2]))
    assert all(is_alpha_regular(s4_trivial, g) for g in range(s4.order))


def test_inverse_symmetry(diag33_alpha, s4_cover):
    assert diag33_alpha.inverse_symmetric()
    assert s4_cover.inverse_symmetric()


def test_transposition_factors():
    assert transposition_factors([1, 0, 3, 2]) == [(0, 1), (2, 3)]
    assert transposition_factors([1, 2, 0, 3]) == [(0, 1), (1, 2)]
    assert transposition_factors([0, 1, 2]) == []


def test_clifford_unit_vectors():
    """Normalized transposition vectors square to 1 and anticommute when disjoint."""
    n = 4
    t1 = unit_transposition(n, 0, 1)
    t3 = unit_transposition(n, 2, 3)
    assert t1 * t1 == CliffordElement.scalar(n)
    assert t1 * t3 * t1 * t3 == CliffordElement.scalar(n, -1)
    v = CliffordElement.transposition_vector(n, 0, 1)
    assert v * v == CliffordElement.scalar(n, 2)
    assert (t1 * t3) * (t1 * t3).reverse() == CliffordElement.scalar(n)


@given(st.lists(st.integers(min_value=0, max_value=2), min_size=9, max_size=9))
@settings(max_examples=25, derandomize=True, deadline=None)
def test_commutator_ratio_is_coboundary_invariant(diag33, diag33_alpha, exponents):
    """alpha(h, g)/alpha(g, h) on commuting pairs depends only on the cohomology class."""
    beta = [root_of_unity(3, k) for k in exponents]
    twisted = diag33_alpha.twisted_by(beta)
    verify_cocycle(twisted)
    for g in range(diag33.order):
        for h in diag33.centralizer(g):
            assert commutator_ratio(twisted, h, g) == commutator_ratio(diag33_alpha, h, g)


@pytest.mark.slow
def test_cover_commutator_ratio_is_coboundary_invariant(s4, s4_cover):
    rng = random.Random(0)
    for _ in range(20):
        twisted = s4_cover.twisted_by(random_beta(s4, rng))
        for g in range(s4.order):
            for h in s4.centralizer(g):
                assert commutator_ratio(twisted, h, g) == commutator_ratio(s4_cover, h, g)


def _twisting_case(request, case):
    match case:
        case "diag33":
            return request.getfixturevalue("diag33"), request.getfixturevalue("diag33_alpha")
        case "diag32":
            group = diagonal_group(3, 2)
            return group, elementary_abelian_cocycle(group)
        case "plus_minus":
            group = request.getfixturevalue("plus_minus")
            return group, trivial_cocycle(group)
        case "s4_cover":
            return request.getfixturevalue("s4"), request.getfixturevalue("s4_cover")
    raise ValueError(case)


@pytest.mark.parametrize(
    "case", ["diag33", "diag32", "plus_minus", pytest.param("s4_cover", marks=pytest.mark.slow)]
)
def test_admissibility_survives_coboundary_twists(request, case):
    """Twisting by a random coboundary leaves every class flag unchanged."""
    group, alpha = _twisting_case(request, case)
    base = classify_all(group, alpha).flags()
    rng = random.Random(2024)
    for _ in range(100):
        assert classify_all(group, alpha.twisted_by(random_beta(group, rng))).flags() == base
