"""Two-cocycles on finite matrix groups."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
import math
import random

from .const import _LOGGER
from .cyclo import ONE, Cyclotomic, as_cyclotomic, root_of_unity
from .exceptions import (
    InternalInconsistency,
    NotACocycle,
    NotNormalized,
    NotRootOfUnity,
    WrongGroupShape,
)
from .matgroup import FiniteMatrixGroup


@dataclass(frozen=True, eq=False)
class TwoCocycle:
    """A map G x G -> roots of unity stored as a table."""

    group: FiniteMatrixGroup
    table: tuple[tuple[Cyclotomic, ...], ...]
    name: str = "alpha"

    def __call__(self, g: int, h: int) -> Cyclotomic:
        return self.table[g][h]

    def __mul__(self, other: TwoCocycle) -> TwoCocycle:
        """Return the pointwise product."""
        return TwoCocycle(
            self.group,
            tuple(
                tuple(a * b for a, b in zip(row, other_row, strict=True))
                for row, other_row in zip(self.table, other.table, strict=True)
            ),
            name=f"{self.name}*{other.name}",
        )

    def twisted_by(self, beta: Sequence[Cyclotomic]) -> TwoCocycle:
        """Return alpha times the coboundary of beta."""
        return self * coboundary_from(self.group, beta)

    def inverse_symmetric(self) -> bool:
        """Check alpha(g, g^-1) = alpha(g^-1, g) for all g."""
        group = self.group
        return all(self(g, group.inv(g)) == self(group.inv(g), g) for g in range(group.order))

    def is_trivial(self) -> bool:
        """Return whether every value is 1."""
        return all(value == 1 for row in self.table for value in row)


@dataclass(frozen=True, slots=True)
class CocycleReport:
    """Outcome of an exhaustive cocycle check."""

    order: int
    triples_checked: int
    values: tuple[str, ...] = field(default=())


def verify_cocycle(alpha: TwoCocycle) -> CocycleReport:
    """Check normalization, finite order and the cocycle identity on all triples."""
    group = alpha.group
    n = group.order
    for g in range(n):
        for pair in ((0, g), (g, 0)):
            if alpha(*pair) != 1:
                raise NotNormalized(f"{alpha.name}; value {alpha(*pair)} at the identity", pair)
    roots: set[str] = set()
    for g in range(n):
        for h in range(n):
            if not alpha(g, h).is_root_of_unity():
                raise NotRootOfUnity(f"{alpha.name}; {alpha(g, h)} has infinite order", (g, h))
            roots.add(str(alpha(g, h)))
    mul = group.mul_table
    for g in range(n):
        for h in range(n):
            left_gh = alpha(g, h)
            gh = mul[g][h]
            for k in range(n):
                if left_gh * alpha(gh, k) != alpha(h, k) * alpha(g, mul[h][k]):
                    raise NotACocycle(f"{alpha.name}; cocycle identity fails", (g, h, k))
    _LOGGER.debug("%s; verified on %d triples", alpha.name, n**3)
    return CocycleReport(order=n, triples_checked=n**3, values=tuple(sorted(roots)))


def trivial_cocycle(group: FiniteMatrixGroup) -> TwoCocycle:
    """Return the cocycle that is identically 1."""
    row = tuple(ONE for _ in range(group.order))
    return TwoCocycle(group, tuple(row for _ in range(group.order)), name="trivial")


def cocycle_from_table(
    group: FiniteMatrixGroup, values: Mapping[tuple[int, int], Cyclotomic]
) -> TwoCocycle:
    """Build a cocycle from explicit values; missing entries default to 1."""
    table = tuple(
        tuple(as_cyclotomic(values.get((g, h), ONE)) for h in range(group.order))
        for g in range(group.order)
    )
    return TwoCocycle(group, table, name="table")


def coboundary_from(group: FiniteMatrixGroup, beta: Sequence[Cyclotomic]) -> TwoCocycle:
    """Return alpha(g, h) = beta(g) beta(h) / beta(gh), with beta rescaled so beta(1) = 1."""
    scale = as_cyclotomic(beta[0]).inverse()
    normalized = [as_cyclotomic(b) * scale for b in beta]
    inverses = [b.inverse() for b in normalized]
    table = tuple(
        tuple(
            normalized[g] * normalized[h] * inverses[group.mul(g, h)] for h in range(group.order)
        )
        for g in range(group.order)
    )
    return TwoCocycle(group, table, name="coboundary")


def commutator_ratio(alpha: TwoCocycle, h: int, g: int) -> Cyclotomic:
    """Return alpha(h, g) / alpha(g, h)."""
    return alpha(h, g) / alpha(g, h)


def is_alpha_regular(alpha: TwoCocycle, g: int) -> bool:
    """Return whether alpha(g, h) = alpha(h, g) for all h in C(g)."""
    return all(alpha(g, h) == alpha(h, g) for h in alpha.group.centralizer(g))


def _diagonal_exponents(group: FiniteMatrixGroup, ell: int) -> list[tuple[int, ...]]:
    n, conductor = group.dim, group.conductor
    step = conductor // ell
    powers = [root_of_unity(conductor, step * j) for j in range(ell)]
    exponents = []
    for g, m in enumerate(group.elements):
        row = []
        for i in range(n):
            if any(m[i][j] for j in range(n) if j != i):
                raise WrongGroupShape(f"element {g} is not diagonal")
            try:
                row.append(powers.index(m[i][i]))
            except ValueError:
                raise WrongGroupShape(
                    f"element {g} has entry {m[i][i]} that is not a power of zeta_{ell}"
                ) from None
        if sum(row) % ell:
            raise WrongGroupShape(f"element {g} does not have determinant 1")
        exponents.append(tuple(row))
    return exponents


def elementary_abelian_cocycle(
    group: FiniteMatrixGroup, n: int | None = None, ell: int | None = None
) -> TwoCocycle:
    """Return alpha(g, h) = q^(-sum_{k<=n-2} i_k j_(k+1)) on the diagonal group.

    Exponent coordinates i_k of g = g_1^(i_1) ... g_(n-1)^(i_(n-1)) are
    partial sums of the diagonal discrete logarithms.
    """
    n = group.dim if n is None else n
    ell = group.conductor if ell is None else ell
    if n != group.dim:
        raise WrongGroupShape(f"group acts on dimension {group.dim}, not {n}")
    if ell < 2 or group.conductor % ell:
        raise WrongGroupShape(f"zeta_{ell} is not available at conductor {group.conductor}")
    coords = []
    for diagonal in _diagonal_exponents(group, ell):
        partial = 0
        row = []
        for a in diagonal[: n - 1]:
            partial += a
            row.append(partial % ell)
        coords.append(row)
    step = group.conductor // ell
    table = tuple(
        tuple(
            root_of_unity(
                group.conductor,
                -step * sum(coords[g][k] * coords[h][k + 1] for k in range(n - 2)),
            )
            for h in range(group.order)
        )
        for g in range(group.order)
    )
    return TwoCocycle(group, table, name="elem-abelian")


def _blade_sign(a: int, b: int) -> int:
    """Return the reordering sign of e_A e_B for bitmask blades with e_i^2 = 1."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


@dataclass(frozen=True, slots=True)
class CliffordElement:
    """Element of the Clifford algebra on n orthonormal generators, blades as bitmasks."""

    n: int
    terms: Mapping[int, Cyclotomic]

    @classmethod
    def scalar(cls, n: int, value: Cyclotomic | int | Fraction = 1) -> CliffordElement:
        """Return a scalar element."""
        value = as_cyclotomic(value)
        return cls(n, {0: value} if value else {})

    @classmethod
    def vector(cls, n: int, coords: Mapping[int, Cyclotomic | int | Fraction]) -> CliffordElement:
        """Return sum c_i e_i with 0-based generator indices."""
        return cls(n, {1 << i: as_cyclotomic(c) for i, c in coords.items() if c})

    @classmethod
    def transposition_vector(cls, n: int, i: int, j: int) -> CliffordElement:
        """Return e_i - e_j (0-based); it squares to 2."""
        return cls.vector(n, {i: 1, j: -1})

    def __mul__(self, other: CliffordElement) -> CliffordElement:
        product: dict[int, Cyclotomic] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                blade = a ^ b
                value = x * y if _blade_sign(a, b) > 0 else -(x * y)
                total = product[blade] + value if blade in product else value
                if total:
                    product[blade] = total
                else:
                    product.pop(blade, None)
        return CliffordElement(self.n, product)

    def reverse(self) -> CliffordElement:
        """Return the reversion, which inverts products of unit vectors."""
        terms = {}
        for blade, value in self.terms.items():
            grade = blade.bit_count()
            terms[blade] = -value if (grade * (grade - 1) // 2) % 2 else value
        return CliffordElement(self.n, terms)

    def scalar_part(self) -> Cyclotomic:
        """Return the grade-0 coefficient."""
        return as_cyclotomic(self.terms.get(0, 0))

    def is_scalar(self) -> bool:
        """Return whether only the grade-0 part is present."""
        return all(blade == 0 for blade in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)


def _permutation_of(group: FiniteMatrixGroup, g: int) -> list[int]:
    m = group.elements[g]
    n = group.dim
    images = []
    for c in range(n):
        column = [m[r][c] for r in range(n)]
        ones = [r for r, x in enumerate(column) if x == 1]
        if len(ones) != 1 or any(x for r, x in enumerate(column) if r != ones[0]):
            raise WrongGroupShape(f"element {g} is not a permutation matrix")
        images.append(ones[0])
    return images


def transposition_factors(images: list[int]) -> list[tuple[int, int]]:
    """Write a permutation as transpositions, cycle (a1 ... ak) -> (a1 a2)(a2 a3)...

    Cycles are taken in order of their minimal moved point.
    """
    seen: set[int] = set()
    factors: list[tuple[int, int]] = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = images[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = images[nxt]
        factors.extend(zip(cycle, cycle[1:], strict=False))
    return factors


def symmetric_group_cocycle(group: FiniteMatrixGroup) -> TwoCocycle:
    """Return the Schur cover cocycle of S_n acting by permutation matrices.

    T(sigma) is the product of unit vectors (e_i - e_j)/sqrt(2) over the
    transposition factors of sigma, and alpha(s, p) = T(s) T(p) T(sp)^-1.
    The vectors e_i - e_j square to 2, so the powers of sqrt(2) are divided
    out at the end and the table stays rational.
    """
    n = group.dim
    lifts = []
    lengths = []
    for g in range(group.order):
        factors = transposition_factors(_permutation_of(group, g))
        lift = CliffordElement.scalar(n)
        for i, j in factors:
            lift = lift * CliffordElement.transposition_vector(n, i, j)
        lifts.append(lift)
        lengths.append(len(factors))
    reversed_lifts = [lift.reverse() for lift in lifts]

    table = []
    for g in range(group.order):
        row = []
        for h in range(group.order):
            gh = group.mul(g, h)
            product = lifts[g] * lifts[h] * reversed_lifts[gh]
            if not product.is_scalar():
                raise InternalInconsistency(f"lift product for ({g}, {h}) is not central")
            scale = 2 ** ((lengths[g] + lengths[h] + lengths[gh]) // 2)
            row.append(as_cyclotomic(product.scalar_part() / scale, 1))
        table.append(tuple(row))
    _LOGGER.debug("S%d; Schur cover cocycle built", n)
    return TwoCocycle(group, tuple(table), name="sym-cover")


def random_beta(group: FiniteMatrixGroup, rng: random.Random) -> list[Cyclotomic]:
    """Return random roots of unity beta(g) at the group conductor."""
    conductor = group.conductor
    span = math.lcm(2, conductor)
    values = []
    for _ in range(group.order):
        k = rng.randrange(span)
        if conductor % 2:
            value = root_of_unity(conductor, k // 2) * (-1 if k % 2 else 1)
        else:
            value = root_of_unity(conductor, k)
        values.append(value)
    return values
