"""Shared fixtures: the groups, cocycles and algebras of the worked examples."""

from pathlib import Path
import sys

import pytest

ROOT = Path(__file__).resolve().parents[1]

if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from helpers import OMEGA, third_generator  # noqa: E402
from tgha.algebra import HeckeAlgebra  # noqa: E402
from tgha.catalog import cyclic_sl2_group, diagonal_group, symmetric_group  # noqa: E402
from tgha.classify import propagate_family, symplectic_reflection_family, zero_family  # noqa: E402
from tgha.cocycle import (  # noqa: E402
    elementary_abelian_cocycle,
    symmetric_group_cocycle,
    trivial_cocycle,
)


@pytest.fixture(scope="session")
def diag33():
    """Diagonal group of order 9 in SL_3 over Q(zeta_3)."""
    return diagonal_group(3, 3)


@pytest.fixture(scope="session")
def diag33_alpha(diag33):
    """Elementary abelian cocycle on diag33."""
    return elementary_abelian_cocycle(diag33)


@pytest.fixture(scope="session")
def diag33_family(diag33, diag33_alpha):
    """Seeds 1 on g1, g2 and g3."""
    g1, g2 = diag33.generators
    seeds = {g1: 1, g2: 1, third_generator(diag33): 1}
    return propagate_family(diag33, diag33_alpha, seeds)


@pytest.fixture(scope="session")
def diag33_algebra(diag33_family):
    """Twisted graded Hecke algebra of diag33_family."""
    return HeckeAlgebra(diag33_family)


@pytest.fixture(scope="session")
def diag33_zero_algebra(diag33, diag33_alpha):
    """Hecke algebra of the zero family, i.e. the crossed product."""
    return HeckeAlgebra(zero_family(diag33, diag33_alpha))


@pytest.fixture(scope="session")
def s4():
    """S4 acting on C^4 by permutation matrices."""
    return symmetric_group(4)


@pytest.fixture(scope="session")
def s4_cover(s4):
    """Schur cover cocycle of S4."""
    return symmetric_group_cocycle(s4)


@pytest.fixture(scope="session")
def s4_trivial(s4):
    """Trivial cocycle of S4."""
    return trivial_cocycle(s4)


@pytest.fixture(scope="session")
def plus_minus():
    """{+I, -I} inside Sp(C^2)."""
    return cyclic_sl2_group(2)


@pytest.fixture(scope="session")
def plus_minus_algebra(plus_minus):
    """Symplectic reflection algebra of {+I, -I} with c = 2 and c_{-I} = 1."""
    alpha = trivial_cocycle(plus_minus)
    family = symplectic_reflection_family(plus_minus, alpha, OMEGA, {1: 1}, c=2)
    return HeckeAlgebra(family)
