"""Tests for finite matrix groups."""

import logging

import pytest

from tgha.cyclo import ONE, ZERO, root_of_unity
from tgha.exceptions import DegenerateCase, GroupTooLarge, SingularGenerator
from tgha.linalg import Matrix, Subspace, vector
from tgha.matgroup import generate_group

from helpers import perm


def test_closure_orders(diag33, s4):
    assert diag33.order == 9
    assert s4.order == 24
    assert generate_group([Matrix.identity(3)]).order == 1


def test_tables_are_consistent(diag33, s4):
    for group in (diag33, s4):
        assert group.is_associative()
        assert all(group.mul(g, group.inv(g)) == 0 for g in range(group.order))
        assert all(group.mul(0, g) == g == group.mul(g, 0) for g in range(group.order))


def test_elements_are_generator_words(diag33):
    g1, g2 = diag33.generators
    assert diag33.word(0) == "e"
    assert diag33.word(g1) == "g1"
    assert diag33.word(diag33.mul(g1, g1)) == "g1^2"
    assert diag33.word(diag33.mul(g1, g2)) == "g1*g2"
    assert diag33.length(diag33.mul(g1, g2)) == 2


def test_errors():
    with pytest.raises(GroupTooLarge):
        generate_group([Matrix.of([[0, 1], [1, 0]]), Matrix.of([[1, 0], [0, -1]])], cap=4)
    with pytest.raises(SingularGenerator) as excinfo:
        generate_group([Matrix.identity(2), Matrix.of([[1, 1], [1, 1]])])
    assert excinfo.value.index == 2


def test_classes(s4):
    sizes = sorted(len(c) for c in s4.classes)
    assert sizes == [1, 3, 6, 6, 8]
    for members in s4.classes:
        assert s4.representative(members[-1]) == members[0] == min(members)


def test_centralizer(diag33, s4):
    assert diag33.centralizer(diag33.generators[0]) == list(range(9))
    assert len(s4.centralizer(perm(s4, [1, 0, 3, 2]))) == 8
    assert len(s4.centralizer(perm(s4, [1, 2, 0, 3]))) == 3
    g = perm(s4, [1, 2, 0, 3])
    assert 0 in s4.centralizer(g) and g in s4.centralizer(g)


def test_fixed_and_perp_spaces(diag33, s4):
    g1 = diag33.generators[0]
    assert diag33.fixed_space(0).dim == 3
    assert diag33.perp_basis(0).dim == 0
    assert diag33.fixed_space(g1) == Subspace.span(3, [vector([0, 0, 1])])
    assert diag33.perp_basis(g1) == Subspace.span(3, [vector([1, 0, 0]), vector([0, 1, 0])])

    g = perm(s4, [1, 0, 3, 2])
    assert s4.fixed_space(g) == Subspace.span(4, [vector([1, 1, 0, 0]), vector([0, 0, 1, 1])])
    assert s4.perp_basis(g) == Subspace.span(4, [vector([1, -1, 0, 0]), vector([0, 0, 1, -1])])


def test_fixed_and_perp_are_complementary_and_orthogonal(s4):
    form = s4.invariant_form()
    for g in range(s4.order):
        fixed, perp = s4.fixed_space(g), s4.perp_basis(g)
        assert fixed.dim + perp.dim == 4
        for u in fixed.basis:
            for w in perp.basis:
                pairing = sum(
                    (u[r].conjugate() * form[r][c] * w[c] for r in range(4) for c in range(4)),
                    ZERO,
                )
                assert pairing == 0


def test_codim(s4):
    transposition = perm(s4, [1, 0, 2, 3])
    assert s4.codim(transposition) == 1
    assert s4.codim(perm(s4, [1, 0, 3, 2])) == 2
    assert s4.codim(perm(s4, [1, 2, 0, 3])) == 2
    assert s4.codim(perm(s4, [1, 2, 3, 0])) == 3
    assert s4.element_order(transposition) == 2


def test_invariant_form(diag33, s4):
    assert s4.invariant_form() == Matrix.identity(4).scale(24)
    assert diag33.invariant_form() == Matrix.identity(3).scale(9)
    assert generate_group([Matrix.identity(2)]).invariant_form() == Matrix.identity(2)


def test_invariant_form_is_invariant(diag33):
    form = diag33.invariant_form()
    for m in diag33.elements:
        assert m.conjugate_transpose() @ form @ m == form


def test_h_perp_det(diag33, s4):
    g1, g2 = diag33.generators
    assert diag33.h_perp_det(g1, 0) == 1
    assert diag33.h_perp_det(g1, g2) == root_of_unity(3, 1)
    assert s4.h_perp_det(perm(s4, [1, 0, 3, 2]), perm(s4, [1, 0, 2, 3])) == -1


def test_h_perp_det_is_multiplicative_on_centralizer(s4):
    g = perm(s4, [1, 0, 3, 2])
    centralizer = s4.centralizer(g)
    for h in centralizer:
        for k in centralizer:
            assert s4.h_perp_det(g, s4.mul(h, k)) == s4.h_perp_det(g, h) * s4.h_perp_det(g, k)


def test_h_perp_det_on_identity(diag33, caplog):
    with caplog.at_level(logging.WARNING, logger="tgha"):
        assert diag33.h_perp_det(0, diag33.generators[0]) == ONE
    assert "identity quotient" in caplog.text
    with pytest.raises(DegenerateCase):
        diag33.h_perp_det(0, 1, strict=True)
