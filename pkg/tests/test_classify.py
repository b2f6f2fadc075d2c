"""Tests for admissibility, form propagation and family verification."""

from hypothesis import given, settings, strategies as st
import pytest

from helpers import OMEGA, perm, third_generator
from tgha.catalog import diagonal_group, symmetric_group
from tgha.classify import (
    FormFamily,
    SkewForm,
    canonical_form,
    class_admissible,
    classify_all,
    invariant_two_form_dim,
    propagate_family,
    symplectic_reflection_family,
    verify_family,
    zero_family,
)
from tgha.cocycle import elementary_abelian_cocycle, trivial_cocycle
from tgha.exceptions import (
    IdentityElement,
    InconsistentPropagation,
    NotAdmissible,
    WrongCodimension,
    WrongGroupShape,
)
from tgha.linalg import Matrix
from tgha.matgroup import generate_group


def test_diag33_with_elementary_abelian_cocycle(diag33, diag33_alpha):
    report = classify_all(diag33, diag33_alpha)
    g1, g2 = diag33.generators
    assert set(report.admissible) == {g1, g2, third_generator(diag33)}
    assert report.d == 3
    assert report.inv2dim == 0
    assert report.total == 3


def test_diag33_with_trivial_cocycle(diag33):
    report = classify_all(diag33, trivial_cocycle(diag33))
    assert report.d == 0
    assert report.total == 0


def test_square_of_generator_is_not_admissible(diag33, diag33_alpha):
    """g1^2 has the right codimension but fails the determinant criterion against g2."""
    g1, g2 = diag33.generators
    result = class_admissible(diag33, diag33_alpha, diag33.mul(g1, g1))
    assert not result.admissible
    assert result.codim == 2
    assert result.witness == g2
    assert result.det != result.ratio


@pytest.mark.parametrize(("n", "ell", "d"), [(3, 2, 3), (4, 3, 4), (4, 2, 6)])
def test_diagonal_family_sizes(n, ell, d):
    group = diagonal_group(n, ell)
    assert classify_all(group, elementary_abelian_cocycle(group)).d == d


def test_s4_cover(s4, s4_cover):
    report = classify_all(s4, s4_cover)
    double = s4.representative(perm(s4, [1, 0, 3, 2]))
    three_cycle = s4.representative(perm(s4, [1, 2, 0, 3]))
    assert set(report.admissible) == {double, three_cycle}
    assert report.d == 2
    assert report.inv2dim == 0
    entries = {entry.representative: entry for entry in report.classes}
    assert not entries[double].regular
    assert entries[three_cycle].regular


def test_s4_trivial(s4, s4_trivial):
    report = classify_all(s4, s4_trivial)
    assert report.d == 1
    assert report.admissible == (s4.representative(perm(s4, [1, 2, 0, 3])),)


def test_reflection_has_codimension_one(s4, s4_trivial):
    """Transpositions fix a hyperplane, so they never carry a form."""
    result = class_admissible(s4, s4_trivial, perm(s4, [1, 0, 2, 3]))
    assert result.codim == 1
    assert not result.admissible


def test_class_sizes_cover_the_group(s4, s4_cover):
    report = classify_all(s4, s4_cover)
    assert 1 + sum(entry.size for entry in report.classes) == s4.order


def test_invariant_two_forms():
    identity = generate_group([Matrix.identity(3)], 10)
    assert invariant_two_form_dim(identity) == 3
    assert invariant_two_form_dim(symmetric_group(3)) == 0


def test_plus_minus(plus_minus):
    report = classify_all(plus_minus, trivial_cocycle(plus_minus))
    assert report.d == 1
    assert report.inv2dim == 1
    assert report.total == 2


def test_identity_is_rejected(diag33, diag33_alpha):
    with pytest.raises(IdentityElement):
        class_admissible(diag33, diag33_alpha, 0)
    with pytest.raises(IdentityElement):
        propagate_family(diag33, diag33_alpha, {0: 1})


def test_canonical_forms(diag33, plus_minus):
    g1, _ = diag33.generators
    form = canonical_form(diag33, g1)
    assert form(0, 1) == 1
    assert form(1, 0) == -1
    assert form(0, 2) == 0
    assert form.kernel() == diag33.fixed_space(g1)
    assert canonical_form(plus_minus, 1).matrix == OMEGA


def test_canonical_form_needs_codimension_two(s4):
    with pytest.raises(WrongCodimension):
        canonical_form(s4, perm(s4, [1, 0, 2, 3]))


def test_propagated_family_passes(diag33_family):
    report = verify_family(diag33_family)
    assert report.passed
    assert report.violation is None
    assert len(report.support) == 3
    assert report.conjugation_pairs > 0


def test_seed_scale_carries_through(diag33, diag33_alpha):
    g1, _ = diag33.generators
    family = propagate_family(diag33, diag33_alpha, {g1: 5})
    assert family.support() == [g1]
    assert family.value(g1, 0, 1) == 5
    assert family.value(g1, 1, 0) == -5


def test_zero_seed_is_skipped(diag33, diag33_alpha):
    g1, _ = diag33.generators
    assert propagate_family(diag33, diag33_alpha, {g1: 0}).support() == []


def test_inadmissible_seed(diag33, diag33_alpha):
    g1, g2 = diag33.generators
    with pytest.raises(NotAdmissible) as excinfo:
        propagate_family(diag33, diag33_alpha, {diag33.mul(g1, g1): 1})
    assert excinfo.value.element == g2


def test_forced_inadmissible_seed_is_inconsistent(diag33, diag33_alpha):
    """Forcing past admissibility fails later, when conjugates disagree."""
    g1, _ = diag33.generators
    with pytest.raises(InconsistentPropagation):
        propagate_family(diag33, diag33_alpha, {diag33.mul(g1, g1): 1}, force=True)


def test_s4_cover_propagation(s4, s4_cover):
    double = s4.representative(perm(s4, [1, 0, 3, 2]))
    three_cycle = s4.representative(perm(s4, [1, 2, 0, 3]))
    family = propagate_family(s4, s4_cover, {double: 1, three_cycle: 1})
    assert len(family.support()) == 3 + 8
    assert verify_family(family).passed


def test_corrupted_family_reports_conjugation(diag33, diag33_alpha):
    g1, _ = diag33.generators
    square = diag33.mul(g1, g1)
    family = FormFamily(diag33, diag33_alpha, {square: canonical_form(diag33, square)})
    report = verify_family(family)
    assert not report.passed
    assert report.violation.condition == "conjugation"
    assert report.violation.elements[0] == square


def test_non_skew_form_is_reported(diag33, diag33_alpha, diag33_family):
    """Replacing a form by an equivalent skew pullback is fine, a symmetric one is not."""
    g1, _ = diag33.generators
    family = diag33_family.with_form(g1, canonical_form(diag33, g1).pullback(Matrix.identity(3)))
    assert verify_family(family).passed
    broken = FormFamily(diag33, diag33_alpha, {g1: SkewForm(Matrix.identity(3))})
    assert verify_family(broken).violation.condition == "skew"


def test_zero_family(diag33, diag33_alpha):
    report = verify_family(zero_family(diag33, diag33_alpha))
    assert report.passed
    assert report.support == ()


@given(st.fractions().filter(bool))
@settings(max_examples=20, derandomize=True, deadline=None)
def test_symplectic_reflection_family(plus_minus, c):
    """Any nonzero central parameter puts c omega on the identity."""
    alpha = trivial_cocycle(plus_minus)
    family = symplectic_reflection_family(plus_minus, alpha, OMEGA, {1: 1}, c=c)
    assert family.support() == [0, 1]
    assert family.forms[0](0, 1) == c
    assert family.forms[1].matrix == OMEGA
    assert verify_family(family).passed


def test_identity_form(plus_minus):
    alpha = trivial_cocycle(plus_minus)
    family = propagate_family(plus_minus, alpha, {1: 1}, identity_form=OMEGA)
    assert 0 in family.support()
    assert verify_family(family).passed
    with pytest.raises(WrongGroupShape):
        propagate_family(plus_minus, alpha, {}, identity_form=Matrix.identity(2))
