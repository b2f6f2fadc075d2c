"""Element lookups shared by the tests."""

from tgha.catalog import permutation_matrix
from tgha.cocycle import CliffordElement
from tgha.cyclo import root_of_unity
from tgha.linalg import Matrix

OMEGA = Matrix.of([[0, 1], [-1, 0]])


def perm(group, images):
    """Return the element index of the permutation i -> images[i] (0-based)."""
    return group.index_of(permutation_matrix(list(images)))


def third_generator(group):
    """Return g3 = g1^-1 g2^-1 in the diagonal group on C^3."""
    g1, g2 = group.generators
    return group.mul(group.inv(g1), group.inv(g2))


def unit_transposition(n, i, j):
    """Return (e_i - e_j)/sqrt(2) over Q(zeta_8); it squares to 1."""
    scale = (root_of_unity(8, 1) + root_of_unity(8, -1)).inverse()
    return CliffordElement.vector(n, {i: scale, j: -scale})
