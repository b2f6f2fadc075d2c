"""Finite matrix groups over cyclotomic fields."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
import math

from .const import _LOGGER, DEFAULT_GROUP_CAP, IDENTITY_WORD
from .cyclo import ONE, ZERO, Cyclotomic
from .exceptions import DegenerateCase, GroupTooLarge, SingularGenerator
from .linalg import Matrix, Subspace, column_space, kernel, solve


@dataclass(frozen=True, eq=False)
class FiniteMatrixGroup:
    """A finite subgroup of GL(V) with its multiplication tables.

    Element 0 is the identity. Element words are shortest words in the
    generators, found by breadth-first closure.
    """

    dim: int
    conductor: int
    elements: tuple[Matrix, ...]
    generators: tuple[int, ...]
    mul_table: tuple[tuple[int, ...], ...]
    inv_table: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    name: str = "G"
    _index: dict[Matrix, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index.update({m: i for i, m in enumerate(self.elements)})

    @property
    def order(self) -> int:
        """Return |G|."""
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        """Return the index of the product ab."""
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        """Return the index of the inverse."""
        return self.inv_table[a]

    def conjugate(self, g: int, h: int) -> int:
        """Return the index of h^-1 g h."""
        return self.mul_table[self.mul_table[self.inv_table[h]][g]][h]

    def index_of(self, matrix: Matrix) -> int:
        """Return the index of a matrix, or raise KeyError."""
        return self._index[matrix]

    def matrix(self, g: int) -> Matrix:
        """Return the matrix of element g."""
        return self.elements[g]

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Return the conjugacy classes, each sorted with its representative first."""
        assigned: dict[int, int] = {}
        classes: list[tuple[int, ...]] = []
        for g in range(self.order):
            if g in assigned:
                continue
            members = sorted({self.conjugate(g, h) for h in range(self.order)})
            for k in members:
                assigned[k] = len(classes)
            classes.append(tuple(members))
        _LOGGER.debug("%s; %d conjugacy classes", self.name, len(classes))
        return tuple(classes)

    @cached_property
    def _class_of(self) -> tuple[int, ...]:
        lookup = [0] * self.order
        for number, members in enumerate(self.classes):
            for k in members:
                lookup[k] = number
        return tuple(lookup)

    def class_of(self, g: int) -> tuple[int, ...]:
        """Return the conjugacy class containing g."""
        return self.classes[self._class_of[g]]

    def representative(self, g: int) -> int:
        """Return the minimal index in the conjugacy class of g."""
        return self.class_of(g)[0]

    def centralizer(self, g: int) -> list[int]:
        """Return C(g) = {h | hg = gh}, sorted by index."""
        return [h for h in range(self.order) if self.mul_table[h][g] == self.mul_table[g][h]]

    def word(self, g: int) -> str:
        """Return a shortest generator word such as g1*g2^2."""
        letters = self.words[g]
        if not letters:
            return IDENTITY_WORD
        parts: list[str] = []
        run = 1
        for i, letter in enumerate(letters):
            if i + 1 < len(letters) and letters[i + 1] == letter:
                run += 1
                continue
            parts.append(f"g{letter}" if run == 1 else f"g{letter}^{run}")
            run = 1
        return "*".join(parts)

    def length(self, g: int) -> int:
        """Return the word length of g in the generators."""
        return len(self.words[g])

    def element_order(self, g: int) -> int:
        """Return the multiplicative order of g."""
        k, power = 1, g
        while power:
            power = self.mul_table[power][g]
            k += 1
        return k

    def codim(self, g: int) -> int:
        """Return codim V^g."""
        return self.dim - self.fixed_space(g).dim

    def fixed_space(self, g: int) -> Subspace:
        """Return V^g = ker(g - 1)."""
        return self._fixed_spaces[g]

    def perp_basis(self, g: int) -> Subspace:
        """Return (V^g)^perp = Im(g - 1)."""
        return self._perp_spaces[g]

    @cached_property
    def _fixed_spaces(self) -> tuple[Subspace, ...]:
        identity = Matrix.identity(self.dim)
        return tuple(
            Subspace.span(self.dim, kernel(m - identity)) for m in self.elements
        )

    @cached_property
    def _perp_spaces(self) -> tuple[Subspace, ...]:
        identity = Matrix.identity(self.dim)
        return tuple(Subspace(self.dim, column_space(m - identity)) for m in self.elements)

    def adapted_basis(self, g: int) -> Matrix:
        """Return the matrix with columns [perp basis | fixed basis] for g."""
        return Matrix.from_columns([*self.perp_basis(g).basis, *self.fixed_space(g).basis])

    def invariant_form(self) -> Matrix:
        """Return the G-invariant Hermitian form H = sum g* g."""
        total = Matrix.zeros(self.dim)
        for m in self.elements:
            total = total + m.conjugate_transpose() @ m
        return total

    def h_perp_det(self, g: int, h: int, *, strict: bool = False) -> Cyclotomic:
        """Return det of h acting on (V^g)^perp through V/V^g.

        The image h.b of each perp basis vector is written in the basis
        [perp | fixed] and the fixed components are dropped.
        """
        c = self.codim(g)
        if c == 0:
            if strict:
                raise DegenerateCase(f"V^g = V for element {g}")
            _LOGGER.warning("%s; h_perp_det on identity quotient, returning 1", self.name)
            return ONE
        basis = self.adapted_basis(g)
        h_matrix = self.elements[h]
        block = []
        for b in self.perp_basis(g).basis:
            coords = solve(basis, h_matrix.apply(b))
            block.append(coords[:c])
        return Matrix(tuple(zip(*block, strict=True))).det()

    def is_associative(self) -> bool:
        """Check (ab)c = a(bc) on all triples."""
        m = self.mul_table
        n = self.order
        return all(m[m[a][b]][c] == m[a][m[b][c]] for a in range(n) for b in range(n) for c in range(n))


def _conductor_of(gens: Sequence[Matrix]) -> int:
    conductor = 1
    for m in gens:
        for row in m.rows:
            for x in row:
                if not x.is_rational:
                    conductor = math.lcm(conductor, x.conductor)
    return conductor


def generate_group(
    gens: Sequence[Matrix],
    cap: int = DEFAULT_GROUP_CAP,
    *,
    conductor: int | None = None,
    name: str = "G",
) -> FiniteMatrixGroup:
    """Close a list of generators under multiplication."""
    if not gens:
        raise ValueError("at least one generator is required")
    n = gens[0].dim
    for number, m in enumerate(gens, start=1):
        if m.dim != n or m.ncols != n:
            raise ValueError(f"generator g{number} has the wrong shape")
        if m.det() == ZERO:
            raise SingularGenerator(number)

    identity = Matrix.identity(n)
    elements: list[Matrix] = [identity]
    index: dict[Matrix, int] = {identity: 0}
    words: list[tuple[int, ...]] = [()]
    parent: list[tuple[int, int]] = [(0, 0)]
    right: list[list[int]] = []

    position = 0
    while position < len(elements):
        current = elements[position]
        row: list[int] = []
        for number, s in enumerate(gens, start=1):
            product = current @ s
            found = index.get(product)
            if found is None:
                if len(elements) >= cap:
                    raise GroupTooLarge(cap)
                found = len(elements)
                index[product] = found
                elements.append(product)
                words.append((*words[position], number))
                parent.append((position, number - 1))
            row.append(found)
        right.append(row)
        position += 1

    order = len(elements)
    mul: list[list[int]] = []
    for a in range(order):
        row = [a] + [0] * (order - 1)
        for b in range(1, order):
            before, s = parent[b]
            row[b] = right[row[before]][s]
        mul.append(row)
    inv = [row.index(0) for row in mul]
    generator_indices = tuple(index[s] for s in gens)

    group = FiniteMatrixGroup(
        dim=n,
        conductor=conductor or _conductor_of(gens),
        elements=tuple(elements),
        generators=generator_indices,
        mul_table=tuple(tuple(r) for r in mul),
        inv_table=tuple(inv),
        words=tuple(words),
        name=name,
    )
    _LOGGER.debug("%s; closure reached %d elements", name, order)
    return group
