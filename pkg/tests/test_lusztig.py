"""Tests for the Lusztig and Drinfeld presentations."""

from fractions import Fraction

import pytest

from tgha.classify import verify_family
from tgha.const import Descent
from tgha.lusztig import (
    PhiMap,
    lusztig_multiply,
    pairing_with_h,
    phi_t,
    root_system,
    verify_phi_isomorphism,
)
from tgha.parsing import parse_element


@pytest.mark.parametrize(
    ("root_type", "positive", "order"),
    [("A1", 1, 2), ("A2", 3, 6), ("B2", 4, 8), ("A3", 6, 24)],
)
def test_root_systems(root_type, positive, order):
    system = root_system(root_type)
    assert len(system.positive_roots) == positive
    assert system.weyl.order == order
    assert len(set(system.reflections)) == positive
    assert all(system.weyl.element_order(s) == 2 for s in system.reflections)


def test_parameters_follow_root_length():
    system = root_system("B2", 1, Fraction(1, 2))
    assert set(system.parameters) == {Fraction(1), Fraction(1, 2)}
    assert system.parameters_invariant()
    assert root_system("A2", 3).parameters == (Fraction(3),) * 3


def test_a1_push_rule():
    """Moving s past v1 costs -2t at parameter 1."""
    system = root_system("A1", 1)
    s = system.weyl.generators[0]
    assert system.lusztig.push_terms(s, 0) == ((0, -2),)
    assert system.lusztig.format(parse_element(system.lusztig, "g1*v1")) == "-v1*g1 - 2*t"


def test_push_rule_is_word_independent():
    """Reducing along the first or the last descent gives the same push rule."""
    for root_type in ("A2", "B2"):
        algebra = root_system(root_type, 1, 2).lusztig
        assert algebra.push_is_word_independent()
        longest = max(range(algebra.group.order), key=algebra.group.length)
        first = algebra.reduced_word(longest, Descent.FIRST)
        last = algebra.reduced_word(longest, Descent.LAST)
        assert len(first) == len(last) == len(root_system(root_type).positive_roots)


def test_lusztig_group_relations():
    system = root_system("A2")
    s1 = system.lusztig.group_element(system.weyl.generators[0])
    assert lusztig_multiply(system, s1, s1) == system.lusztig.one()


def test_rs_forms_are_a_valid_family():
    system = root_system("A2")
    family = system.forms
    assert len(family.support()) > 0
    assert verify_family(family).passed
    assert root_system("A1").forms.support() == []
    assert root_system("A2", 0).forms.support() == []


def test_phi_on_generators():
    system = root_system("A1")
    phi = PhiMap(system)
    s = system.weyl.generators[0]
    assert pairing_with_h(system, 0) == system.drinfeld.group_element(s)
    assert phi.generators[0] == system.drinfeld.variable(0) - system.drinfeld.group_element(s).shift_t(1)
    assert phi_t(system, system.lusztig.one()) == system.drinfeld.one()


@pytest.mark.parametrize(
    ("root_type", "bound"),
    [("A1", 3), ("A2", 1), pytest.param("A2", 2, marks=pytest.mark.slow)],
)
def test_phi_isomorphism(root_type, bound):
    report = verify_phi_isomorphism(root_system(root_type), bound)
    assert report.passed
    assert report.failure is None
    assert report.word_independent
    assert report.parity
    assert report.pairs_checked > 0


def test_phi_with_zero_parameters():
    report = verify_phi_isomorphism(root_system("A2", 0), 1)
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize(("root_type", "k", "k2"), [("B2", 1, 2), ("A3", 1, None)])
def test_phi_isomorphism_larger_types(root_type, k, k2):
    assert verify_phi_isomorphism(root_system(root_type, k, k2), 2).passed
