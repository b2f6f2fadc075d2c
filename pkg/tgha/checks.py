"""Associativity, PBW and conjugation checks for normal-form algebras."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
import math

from .algebra import AlgebraElement, CrossedProductAlgebra, Monomial, NormalFormAlgebra
from .const import _LOGGER, Strategy
from .linalg import sparse_rank


class ProductCache:
    """Memoized products of normal monomials, extended bilinearly."""

    def __init__(self, algebra: NormalFormAlgebra, strategy: Strategy | None = None) -> None:
        """Initialize an empty cache."""
        self.algebra = algebra
        self.strategy = strategy
        self._memo: dict[tuple[Monomial, Monomial], AlgebraElement] = {}

    def monomials(self, x: Monomial, y: Monomial) -> AlgebraElement:
        """Return x * y for two monomials."""
        key = (x, y)
        found = self._memo.get(key)
        if found is None:
            found = self.algebra.multiply(
                AlgebraElement.monomial(x), AlgebraElement.monomial(y), self.strategy
            )
            self._memo[key] = found
        return found

    def __call__(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        terms = []
        for mx, cx in x.terms.items():
            for my, cy in y.terms.items():
                scale = cx * cy
                terms.extend((m, c * scale) for m, c in self.monomials(mx, my).terms.items())
        return AlgebraElement.from_terms(terms)


def exponent_vectors(n: int, degree: int) -> list[tuple[int, ...]]:
    """Return all exponent vectors of the given total degree."""
    vectors = []
    for combo in combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        vectors.append(tuple(exps))
    return vectors


def basis_monomials(
    algebra: NormalFormAlgebra, degree: int, groups: Sequence[int] | None = None
) -> list[Monomial]:
    """Return t-free monomials of one S(V)-degree, group factor in {1} and the generators."""
    if groups is None:
        groups = sorted({0, *algebra.group.generators})
    return [Monomial(e, g) for e in exponent_vectors(algebra.dim, degree) for g in groups]


def monomial_triples(
    algebra: NormalFormAlgebra, bound: int, groups: Sequence[int] | None = None
) -> Iterator[tuple[Monomial, Monomial, Monomial]]:
    """Yield basis monomial triples by increasing total degree up to the bound."""
    by_degree = [basis_monomials(algebra, d, groups) for d in range(bound + 1)]
    for total in range(bound + 1):
        for dx in range(total + 1):
            for dy in range(total - dx + 1):
                dz = total - dx - dy
                yield from product(by_degree[dx], by_degree[dy], by_degree[dz])


def monomial_pairs(
    algebra: NormalFormAlgebra, bound: int, groups: Sequence[int] | None = None
) -> Iterator[tuple[Monomial, Monomial]]:
    """Yield basis monomial pairs by increasing total degree up to the bound."""
    by_degree = [basis_monomials(algebra, d, groups) for d in range(bound + 1)]
    for total in range(bound + 1):
        for dx in range(total + 1):
            yield from product(by_degree[dx], by_degree[total - dx])


@dataclass(frozen=True, slots=True)
class AssociativityReport:
    """Outcome of associativity_check."""

    passed: bool
    triples_checked: int
    jacobi_triples: int
    witness: tuple[Monomial, Monomial, Monomial] | None = None
    jacobi_witness: tuple[int, int, int] | None = None


def associativity_check(algebra: NormalFormAlgebra, degree_bound: int) -> AssociativityReport:
    """Compare x(yz) with (xy)z on basis triples and evaluate the Jacobi sum on variables."""
    cache = ProductCache(algebra)
    checked = 0
    for x, y, z in monomial_triples(algebra, degree_bound):
        checked += 1
        mx, my, mz = (AlgebraElement.monomial(m) for m in (x, y, z))
        left = cache(cache.monomials(x, y), mz)
        right = cache(mx, cache.monomials(y, z))
        if left != right:
            _LOGGER.debug("%s; associativity fails at %s", algebra.group.name, (x, y, z))
            return AssociativityReport(False, checked, 0, witness=(x, y, z))

    jacobi = 0
    n = algebra.dim
    variables = [algebra.variable(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                jacobi += 1
                u, v, w = variables[i], variables[j], variables[k]
                total = (
                    algebra.commutator(u, algebra.commutator(v, w))
                    + algebra.commutator(v, algebra.commutator(w, u))
                    + algebra.commutator(w, algebra.commutator(u, v))
                )
                if total:
                    return AssociativityReport(False, checked, jacobi, jacobi_witness=(i, j, k))
    return AssociativityReport(True, checked, jacobi)


@dataclass(frozen=True, slots=True)
class DegreeCount:
    """Monomial count in filtration degree <= k."""

    degree: int
    expected: int
    observed: int
    collapse: int


@dataclass(frozen=True, slots=True)
class PbwReport:
    """Outcome of pbw_dimension_check."""

    passed: bool
    counts: tuple[DegreeCount, ...] = field(default=())
    first_collapse: int | None = None
    witness: tuple[int, ...] | None = None


def pbw_dimension_check(algebra: NormalFormAlgebra, degree_bound: int) -> PbwReport:
    """Count independent normal monomials in each filtration degree.

    Every word of length <= k in the variables, optionally headed by a
    generator, is reduced with the leftmost and the rightmost strategy. The
    differences span the relations that collapse normal monomials; the
    observed dimension is C(n+k, k)|G| minus their rank at t = 1.
    """
    n = algebra.dim
    heads: list[tuple[int, ...]] = [(), *((n + g,) for g in sorted(set(algebra.group.generators)) if g)]
    differences: list[dict] = []
    counts: list[DegreeCount] = []
    first_collapse: int | None = None
    witness: tuple[int, ...] | None = None
    for k in range(1, degree_bound + 1):
        for letters in product(range(n), repeat=k):
            for head in heads:
                word = head + letters
                left = algebra.reduce_word(word, strategy=Strategy.LEFTMOST)
                right = algebra.reduce_word(word, strategy=Strategy.RIGHTMOST)
                delta = (left - right).at_t_one()
                if delta:
                    differences.append({(m.exps, m.group): c for m, c in delta.terms.items()})
                    if witness is None:
                        witness = word
        collapse = sparse_rank(differences)
        expected = math.comb(n + k, k) * algebra.group.order
        counts.append(DegreeCount(k, expected, expected - collapse, collapse))
        if collapse and first_collapse is None:
            first_collapse = k
    _LOGGER.debug("%s; PBW counts %s", algebra.group.name, [c.observed for c in counts])
    return PbwReport(first_collapse is None, tuple(counts), first_collapse, witness)


@dataclass(frozen=True, slots=True)
class ConjugationReport:
    """Outcome of conjugation_check."""

    passed: bool
    checked: int
    witness: tuple[int, int] | None = None


def conjugation_check(algebra: NormalFormAlgebra) -> ConjugationReport:
    """Check g v g^-1 = g.v for every group element and basis vector."""
    group, alpha = algebra.group, algebra.cocycle
    checked = 0
    for g in range(group.order):
        g_inv = group.inv(g)
        inverse = algebra.group_element(g_inv, alpha(g, g_inv).inverse())
        for i in range(algebra.dim):
            checked += 1
            conjugated = algebra.product(algebra.group_element(g), algebra.variable(i), inverse)
            if conjugated != algebra.act(g, i):
                return ConjugationReport(False, checked, (g, i))
    return ConjugationReport(True, checked)


@dataclass(frozen=True, slots=True)
class GradedReport:
    """Outcome of associated_graded_check."""

    passed: bool
    pairs_checked: int
    witness: tuple[Monomial, Monomial] | None = None


def associated_graded_check(algebra: NormalFormAlgebra, degree_bound: int) -> GradedReport:
    """Check that t = 0 and the top S(V)-degree part both recover the crossed product."""
    crossed = CrossedProductAlgebra(algebra.group, algebra.cocycle)
    checked = 0
    for x, y in monomial_pairs(algebra, degree_bound):
        checked += 1
        mx, my = AlgebraElement.monomial(x), AlgebraElement.monomial(y)
        deformed = algebra.multiply(mx, my)
        plain = crossed.multiply(mx, my)
        if deformed.at_t_zero() != plain or deformed.degree() > x.degree + y.degree:
            return GradedReport(False, checked, (x, y))
        top = AlgebraElement(
            {m: c for m, c in deformed.terms.items() if m.degree == x.degree + y.degree}
        )
        if top.at_t_zero() != plain:
            return GradedReport(False, checked, (x, y))
    return GradedReport(True, checked)
