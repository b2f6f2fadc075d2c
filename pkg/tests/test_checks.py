"""Tests for the associativity, PBW and conjugation checks."""

import pytest

from tgha.algebra import HeckeAlgebra
from tgha.checks import (
    associated_graded_check,
    associativity_check,
    basis_monomials,
    conjugation_check,
    exponent_vectors,
    monomial_pairs,
    pbw_dimension_check,
)
from tgha.catalog import diagonal_group
from tgha.classify import FormFamily, canonical_form, classify_all, propagate_family
from tgha.cocycle import elementary_abelian_cocycle


@pytest.fixture(scope="module")
def corrupted_algebra(diag33, diag33_alpha):
    """Algebra built without verification from a form that breaks conjugation."""
    g1, _ = diag33.generators
    square = diag33.mul(g1, g1)
    family = FormFamily(diag33, diag33_alpha, {square: canonical_form(diag33, square)})
    return HeckeAlgebra(family, force=True)


def test_exponent_vectors():
    assert exponent_vectors(3, 0) == [(0, 0, 0)]
    assert len(exponent_vectors(3, 2)) == 6
    assert all(sum(e) == 3 for e in exponent_vectors(4, 3))


def test_basis_and_pairs(diag33_algebra):
    """Pairs with a degree one left factor also run over every group element."""
    assert len(basis_monomials(diag33_algebra, 1)) == 3 * 3
    pairs = list(monomial_pairs(diag33_algebra, 1))
    assert len(pairs) == 3 * 3 + 2 * 9 * 3
    assert all(r.degree + s.degree <= 1 for r, s in pairs)


def test_associativity(diag33_algebra):
    report = associativity_check(diag33_algebra, 2)
    assert report.passed
    assert report.triples_checked > 0
    assert report.jacobi_triples == 1
    assert report.witness is None


def test_pbw_counts(diag33_algebra):
    report = pbw_dimension_check(diag33_algebra, 3)
    assert report.passed
    assert [c.expected for c in report.counts] == [36, 90, 180]
    assert [c.observed for c in report.counts] == [36, 90, 180]
    assert report.first_collapse is None


def test_conjugation(diag33_algebra):
    report = conjugation_check(diag33_algebra)
    assert report.passed
    assert report.checked == 9 * 3


def test_associated_graded(diag33_algebra):
    assert associated_graded_check(diag33_algebra, 2).passed


def test_crossed_product_is_flat(diag33_zero_algebra):
    """The zero family gives the twisted group algebra of S(V), which is always flat."""
    assert associativity_check(diag33_zero_algebra, 2).passed
    assert pbw_dimension_check(diag33_zero_algebra, 2).passed


def test_corrupted_algebra_fails(corrupted_algebra):
    """A form that breaks conjugation is caught by both checks, with PBW collapsing in degree 2."""
    report = associativity_check(corrupted_algebra, 2)
    assert not report.passed
    assert report.witness is not None or report.jacobi_witness is not None
    pbw = pbw_dimension_check(corrupted_algebra, 2)
    assert not pbw.passed
    assert pbw.first_collapse == 2
    assert pbw.witness is not None
    assert pbw.counts[-1].observed < pbw.counts[-1].expected


@pytest.mark.slow
def test_s4_cover_algebra(s4, s4_cover):
    """Seeds 1 on both admissible classes of the Schur cover twist."""
    seeds = dict.fromkeys(classify_all(s4, s4_cover).admissible, 1)
    algebra = HeckeAlgebra(propagate_family(s4, s4_cover, seeds))
    assert associativity_check(algebra, 2).passed
    assert pbw_dimension_check(algebra, 3).passed
    assert conjugation_check(algebra).passed


@pytest.mark.slow
def test_associativity_to_degree_three(diag33_algebra):
    report = associativity_check(diag33_algebra, 3)
    assert report.passed
    assert report.jacobi_triples == 1
    assert report.witness is None


def test_plus_minus_algebra(plus_minus_algebra):
    """The rank one symplectic reflection algebra with a central term is flat."""
    assert associativity_check(plus_minus_algebra, 3).passed
    report = pbw_dimension_check(plus_minus_algebra, 3)
    assert report.passed
    assert [c.observed for c in report.counts] == [6, 12, 20]
    assert report.first_collapse is None


@pytest.mark.slow
def test_exponent_two_diagonal_algebra():
    """All six admissible seeds on the order 8 diagonal group in SL_4."""
    group = diagonal_group(4, 2)
    alpha = elementary_abelian_cocycle(group)
    seeds = dict.fromkeys(classify_all(group, alpha).admissible, 1)
    assert len(seeds) == 6
    algebra = HeckeAlgebra(propagate_family(group, alpha, seeds))
    assert associativity_check(algebra, 3).passed
    report = pbw_dimension_check(algebra, 3)
    assert report.passed
    assert [c.expected for c in report.counts] == [40, 120, 280]
    assert [c.observed for c in report.counts] == [40, 120, 280]
