"""Builtin groups."""

from __future__ import annotations

from .const import _LOGGER, BUILTIN_PREFIX, DEFAULT_GROUP_CAP, BuiltinGroup
from .cyclo import ONE, ZERO, root_of_unity
from .exceptions import ParseError
from .linalg import Matrix
from .matgroup import FiniteMatrixGroup, generate_group


def permutation_matrix(images: list[int]) -> Matrix:
    """Return P with P e_i = e_{images[i]} (0-based)."""
    n = len(images)
    return Matrix(
        tuple(tuple(ONE if images[c] == r else ZERO for c in range(n)) for r in range(n))
    )


def diagonal_group(n: int, ell: int, cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Return the group generated by g_k = diag(.., q, q^-1, ..), q = zeta_ell, k = 1..n-1."""
    if n < 2 or ell < 2:
        raise ValueError("diagonal group needs n >= 2 and ell >= 2")
    q = root_of_unity(ell, 1)
    q_inv = root_of_unity(ell, -1)
    gens = []
    for k in range(n - 1):
        entries = [ONE] * n
        entries[k] = q
        entries[k + 1] = q_inv
        gens.append(
            Matrix(tuple(tuple(entries[i] if i == j else ZERO for j in range(n)) for i in range(n)))
        )
    return generate_group(gens, cap, conductor=ell, name=f"diag({n},{ell})")


def symmetric_group(n: int, cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Return S_n as permutation matrices, generated by (12) and (12...n)."""
    if n < 2:
        raise ValueError("symmetric group needs n >= 2")
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    gens = [permutation_matrix(swap)]
    if n > 2:
        gens.append(permutation_matrix([(i + 1) % n for i in range(n)]))
    return generate_group(gens, cap, conductor=1, name=f"S{n}")


def cyclic_sl2_group(m: int, cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Return the cyclic group generated by diag(zeta_m, zeta_m^-1) in Sp(C^2)."""
    if m < 1:
        raise ValueError("order must be positive")
    generator = Matrix(((root_of_unity(m, 1), ZERO), (ZERO, root_of_unity(m, -1))))
    return generate_group([generator], cap, conductor=m, name=f"sl2({m})")


def builtin_group(selector: str, cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Build a group from a selector such as builtin:diag:3:3, builtin:sym:4 or builtin:sl2:2."""
    body = selector.removeprefix(BUILTIN_PREFIX)
    kind, *args = body.split(":")
    try:
        numbers = [int(a) for a in args]
        match BuiltinGroup(kind), numbers:
            case BuiltinGroup.DIAG, [n, ell]:
                group = diagonal_group(n, ell, cap)
            case BuiltinGroup.SYM, [n]:
                group = symmetric_group(n, cap)
            case BuiltinGroup.SL2, [m]:
                group = cyclic_sl2_group(m, cap)
            case _:
                raise ParseError(f"wrong arguments for builtin group '{kind}'", selector)
    except ValueError as exc:
        raise ParseError(f"invalid builtin group: {exc}", selector) from exc
    _LOGGER.debug("%s; builtin group of order %d", selector, group.order)
    return group
