"""Lusztig's graded Hecke algebra and its comparison with the Drinfeld presentation.

Vectors are written in the basis of simple roots, so v_i is alpha_i and the
Weyl group acts by rational matrices.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy.liealgebras.cartan_type import CartanType

from .algebra import AlgebraElement, HeckeAlgebra, Monomial, NormalFormAlgebra
from .checks import ProductCache, monomial_pairs
from .classify import FormFamily, SkewForm
from .cocycle import trivial_cocycle
from .const import _LOGGER, PHI_FULL_GROUP_ORDER, Descent, RootType, Strategy
from .cyclo import ZERO, Cyclotomic
from .linalg import Matrix
from .matgroup import FiniteMatrixGroup, generate_group

Root = tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots with their Gram matrix and a W-invariant parameter per root."""

    root_type: RootType
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Root, ...]
    parameters: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        """Return the number of simple roots."""
        return len(self.gram)

    def simple_root(self, i: int) -> Root:
        """Return alpha_(i+1) in simple-root coordinates."""
        return tuple(Fraction(int(r == i)) for r in range(self.rank))

    def pairing(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """Return the W-invariant inner product."""
        return sum(
            (x[r] * self.gram[r][c] * y[c] for r in range(self.rank) for c in range(self.rank)),
            Fraction(0),
        )

    def coroot_pairing(self, x: Sequence[Fraction], alpha: Root) -> Fraction:
        """Return <x, alpha^vee> = 2 <x, alpha> / <alpha, alpha>."""
        return 2 * self.pairing(x, alpha) / self.pairing(alpha, alpha)

    def coroot_pairings(self, alpha: Root) -> tuple[Fraction, ...]:
        """Return <v_r, alpha^vee> for every basis vector."""
        return tuple(self.coroot_pairing(self.simple_root(r), alpha) for r in range(self.rank))

    def reflection_matrix(self, alpha: Root) -> Matrix:
        """Return s_alpha: v -> v - <v, alpha^vee> alpha."""
        pairings = self.coroot_pairings(alpha)
        return Matrix.of(
            [
                [Fraction(int(r == c)) - pairings[c] * alpha[r] for c in range(self.rank)]
                for r in range(self.rank)
            ]
        )

    def parameter(self, alpha: Root) -> Fraction:
        """Return k_alpha for a positive or negative root."""
        key = alpha if alpha in self.positive_roots else tuple(-x for x in alpha)
        return self.parameters[self.positive_roots.index(key)]

    def parameters_invariant(self) -> bool:
        """Check k_(s_i alpha) = k_alpha for every simple reflection and positive root."""
        for i in range(self.rank):
            pairings = self.coroot_pairings(self.simple_root(i))
            for alpha in self.positive_roots:
                shift = sum((alpha[c] * pairings[c] for c in range(self.rank)), Fraction(0))
                image = tuple(a - (shift if r == i else 0) for r, a in enumerate(alpha))
                if self.parameter(image) != self.parameter(alpha):
                    return False
        return True

    @cached_property
    def weyl(self) -> FiniteMatrixGroup:
        """Return W generated by the simple reflections, in order."""
        return generate_group(
            [self.reflection_matrix(self.simple_root(i)) for i in range(self.rank)],
            conductor=1,
            name=f"W({self.root_type})",
        )

    @cached_property
    def reflections(self) -> tuple[int, ...]:
        """Return the element index of s_alpha for each positive root."""
        return tuple(self.weyl.index_of(self.reflection_matrix(a)) for a in self.positive_roots)

    @cached_property
    def forms(self) -> FormFamily:
        """Return the Ram-Shepler family."""
        return rs_forms(self)

    @cached_property
    def lusztig(self) -> LusztigAlgebra:
        """Return Lusztig's algebra for these parameters."""
        return LusztigAlgebra(self)

    @cached_property
    def drinfeld(self) -> HeckeAlgebra:
        """Return the Drinfeld algebra, brackets carrying t^2."""
        return drinfeld_algebra(self)


def root_system(
    root_type: RootType | str, k: Fraction | int = 1, k2: Fraction | int | None = None
) -> RootSystem:
    """Build a builtin root system; k is used on long roots and k2 (default k) on short ones."""
    root_type = RootType(root_type)
    cartan = CartanType(str(root_type))
    rank = cartan.rank()
    ambient = [[Fraction(int(x)) for x in cartan.simple_root(i)] for i in range(1, rank + 1)]
    gram = tuple(
        tuple(sum((a * b for a, b in zip(x, y, strict=True)), Fraction(0)) for y in ambient)
        for x in ambient
    )

    roots: set[Root] = set()
    pending = [tuple(Fraction(int(r == i)) for r in range(rank)) for i in range(rank)]
    while pending:
        alpha = pending.pop()
        if alpha in roots:
            continue
        roots.add(alpha)
        for i in range(rank):
            pairing = 2 * sum((alpha[c] * gram[c][i] for c in range(rank)), Fraction(0)) / gram[i][i]
            pending.append(tuple(a - (pairing if r == i else 0) for r, a in enumerate(alpha)))
    positive = tuple(sorted((a for a in roots if all(x >= 0 for x in a)), key=lambda a: (sum(a), a)))

    def norm(alpha: Root) -> Fraction:
        return sum(
            (alpha[r] * gram[r][c] * alpha[c] for r in range(rank) for c in range(rank)), Fraction(0)
        )

    longest = max(norm(a) for a in positive)
    k = Fraction(k)
    short = k if k2 is None else Fraction(k2)
    parameters = tuple(k if norm(a) == longest else short for a in positive)
    system = RootSystem(root_type, gram, positive, parameters)
    _LOGGER.debug("%s; %d positive roots, parameters %s", root_type, len(positive), parameters)
    return system


class LusztigAlgebra(NormalFormAlgebra):
    """Lusztig's presentation: commuting variables and s_i v = (s_i.v) s_i - k_i <v, alpha_i^vee> t."""

    def __init__(
        self,
        system: RootSystem,
        strategy: Strategy = Strategy.LEFTMOST,
        descent: Descent = Descent.FIRST,
    ) -> None:
        """Initialize over the Weyl group with the trivial cocycle."""
        group = system.weyl
        super().__init__(group, trivial_cocycle(group), strategy)
        self.system = system
        self.descent = descent
        self._simple = group.generators
        self._pairings = tuple(
            system.coroot_pairings(system.simple_root(i)) for i in range(system.rank)
        )
        self._push: dict[tuple[int, int], tuple[tuple[int, Cyclotomic], ...]] = {}

    def bracket_terms(self, i: int, j: int) -> tuple[tuple[int, Cyclotomic], ...]:
        """Return no bracket terms."""
        return ()

    def push_terms(self, g: int, c: int) -> tuple[tuple[int, Cyclotomic], ...]:
        """Return the t-coefficient picked up when g passes v_c."""
        key = (g, c)
        found = self._push.get(key)
        if found is None:
            found = tuple(sorted(self.push_correction(g, c, self.descent).items()))
            self._push[key] = found
        return found

    def left_descents(self, g: int) -> list[int]:
        """Return the simple indices i with l(s_i g) < l(g)."""
        group = self.group
        return [
            i for i, s in enumerate(self._simple) if group.length(group.mul(s, g)) < group.length(g)
        ]

    def reduced_word(self, g: int, descent: Descent = Descent.FIRST) -> tuple[int, ...]:
        """Return simple indices i_1 ... i_l with g = s_i1 ... s_il."""
        letters = []
        while g:
            descents = self.left_descents(g)
            i = descents[0] if descent is Descent.FIRST else descents[-1]
            letters.append(i)
            g = self.group.mul(self._simple[i], g)
        return tuple(letters)

    def push_correction(
        self, g: int, c: int, descent: Descent = Descent.FIRST
    ) -> dict[int, Cyclotomic]:
        """Return D with g v_c = (g.v_c) g + t D, unrolled along a reduced word.

        For g = s_i g' with l(g') < l(g):
        D(g) = -k_i <g'.v_c, alpha_i^vee> g' + s_i D(g').
        """
        if not g:
            return {}
        group = self.group
        descents = self.left_descents(g)
        i = descents[0] if descent is Descent.FIRST else descents[-1]
        s = self._simple[i]
        rest = group.mul(s, g)
        moved = group.matrix(rest).column(c)
        k = self.system.parameter(self.system.simple_root(i))
        pairing = sum(
            (x * p for x, p in zip(moved, self._pairings[i], strict=True) if x),
            ZERO,
        )
        total: dict[int, Cyclotomic] = {}
        lead = -(pairing * k)
        if lead:
            total[rest] = lead
        for h, coeff in self.push_correction(rest, c, descent).items():
            target = group.mul(s, h)
            value = total[target] + coeff if target in total else coeff
            if value:
                total[target] = value
            else:
                total.pop(target, None)
        return total

    def push_is_word_independent(self) -> bool:
        """Check that first and last left descents give the same push rule."""
        return all(
            self.push_correction(g, c, Descent.FIRST) == self.push_correction(g, c, Descent.LAST)
            for g in range(self.group.order)
            for c in range(self.dim)
        )


def lusztig_multiply(system: RootSystem, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Return the normal form of x y in Lusztig's algebra."""
    return system.lusztig.multiply(x, y)


def rs_forms(system: RootSystem) -> FormFamily:
    """Return a_g(v, w) = 1/4 sum over s_alpha s_beta = g of k_a k_b (<v,b^vee><w,a^vee> - <v,a^vee><w,b^vee>)."""
    group = system.weyl
    n = system.rank
    pairings = [system.coroot_pairings(a) for a in system.positive_roots]
    totals: dict[int, list[list[Fraction]]] = {}
    roots = range(len(system.positive_roots))
    for a in roots:
        for b in roots:
            if a == b:
                continue
            g = group.mul(system.reflections[a], system.reflections[b])
            weight = system.parameters[a] * system.parameters[b] / 4
            if not weight:
                continue
            matrix = totals.setdefault(g, [[Fraction(0)] * n for _ in range(n)])
            pa, pb = pairings[a], pairings[b]
            for i in range(n):
                for j in range(n):
                    matrix[i][j] += weight * (pb[i] * pa[j] - pa[i] * pb[j])
    forms = {
        g: SkewForm(Matrix.of(rows))
        for g, rows in totals.items()
        if any(x for row in rows for x in row)
    }
    _LOGGER.debug("%s; %d nonzero Ram-Shepler forms", group.name, len(forms))
    return FormFamily(group, trivial_cocycle(group), forms)


def drinfeld_algebra(system: RootSystem, *, force: bool = False) -> HeckeAlgebra:
    """Return the Hecke algebra of rs_forms with t replaced by t^2."""
    return HeckeAlgebra(system.forms, force=force, bracket_tpow=2)


def pairing_with_h(system: RootSystem, i: int) -> AlgebraElement:
    """Return <v_i, h> = 1/2 sum_alpha k_alpha <v_i, alpha^vee> s_alpha, a t-free group element."""
    algebra = system.drinfeld
    terms = []
    for alpha, k, s in zip(system.positive_roots, system.parameters, system.reflections, strict=True):
        coeff = k * system.coroot_pairing(system.simple_root(i), alpha) / 2
        if coeff:
            terms.extend(algebra.group_element(s, coeff).terms.items())
    return AlgebraElement.from_terms(terms)


class PhiMap:
    """The map Phi_t(v) = v - t <v, h>, Phi_t(g) = g, applied along normal forms."""

    def __init__(self, system: RootSystem) -> None:
        """Precompute the generator images."""
        self.system = system
        self.target = system.drinfeld
        self._products = ProductCache(self.target)
        self.generators = tuple(
            self.target.variable(i) - pairing_with_h(system, i).shift_t(1)
            for i in range(system.rank)
        )
        self._powers: dict[tuple[int, ...], AlgebraElement] = {}

    def _variables(self, exps: tuple[int, ...]) -> AlgebraElement:
        found = self._powers.get(exps)
        if found is None:
            found = self.target.one()
            for i, e in enumerate(exps):
                for _ in range(e):
                    found = self._products(found, self.generators[i])
            self._powers[exps] = found
        return found

    def monomial(self, mono: Monomial) -> AlgebraElement:
        """Return Phi_t of one normal monomial."""
        image = self._variables(mono.exps)
        if mono.group:
            image = self._products(image, self.target.group_element(mono.group))
        return image.shift_t(mono.tpow)

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        terms = []
        for mono, coeff in x.terms.items():
            terms.extend((m, c * coeff) for m, c in self.monomial(mono).terms.items())
        return AlgebraElement.from_terms(terms)

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Return x y in the target algebra."""
        return self._products(x, y)


def phi_t(system: RootSystem, x: AlgebraElement) -> AlgebraElement:
    """Map a Lusztig element into the Drinfeld algebra."""
    return PhiMap(system)(x)


@dataclass(frozen=True, slots=True)
class PhiReport:
    """Outcome of verify_phi_isomorphism."""

    passed: bool
    pairs_checked: int = 0
    relations_checked: int = 0
    identities_checked: int = 0
    word_independent: bool = True
    parity: bool = True
    failure: str | None = None
    witness: tuple | None = None


def _check_identities(system: RootSystem, phi: PhiMap) -> tuple[int, str | None, tuple]:
    target = system.drinfeld
    h = [pairing_with_h(system, i) for i in range(system.rank)]
    checked = 0
    for i in range(system.rank):
        vi = target.variable(i)
        if phi.generators[i] + h[i].shift_t(1) != vi:
            return checked, "v lies in the image", (i,)
        for j in range(i + 1, system.rank):
            checked += 2
            if target.commutator(vi, h[j]) != target.commutator(target.variable(j), h[i]):
                return checked, "[v,<w,h>] = [w,<v,h>]", (i, j)
            if target.commutator(h[i], h[j]) + target.bracket_element(i, j):
                return checked, "[<v,h>,<w,h>] = -sum a_g(v,w) g", (i, j)
    return checked, None, ()


def _check_relations(system: RootSystem, phi: PhiMap) -> tuple[int, str | None, tuple]:
    target = system.drinfeld
    images = phi.generators
    checked = 0
    for i in range(system.rank):
        for j in range(i + 1, system.rank):
            checked += 1
            if target.commutator(images[i], images[j]):
                return checked, "[Phi(v), Phi(w)] = 0", (i, j)
    for i, s in enumerate(system.weyl.generators):
        k = system.parameter(system.simple_root(i))
        pairings = system.coroot_pairings(system.simple_root(i))
        s_bar = target.group_element(s)
        for c in range(system.rank):
            checked += 1
            defect = (
                phi.multiply(s_bar, images[c])
                - phi.multiply(phi(target.act(s, c)), s_bar)
                + target.t().scale(k * pairings[c])
            )
            if defect:
                return checked, "Lusztig relation", (i, c)
    return checked, None, ()


def verify_phi_isomorphism(system: RootSystem, degree_bound: int) -> PhiReport:
    """Check that Phi_t is an algebra isomorphism up to the degree bound.

    Covers the push rule's independence of the reduced word, the two bracket
    identities behind the isomorphism, the images of the defining relations,
    the homomorphism property on basis pairs and the t-parity statement.
    """
    source, target = system.lusztig, system.drinfeld
    group = system.weyl
    if not source.push_is_word_independent():
        return PhiReport(False, word_independent=False, failure="push rule depends on the reduced word")

    phi = PhiMap(system)
    identities, failure, witness = _check_identities(system, phi)
    if failure:
        return PhiReport(False, identities_checked=identities, failure=failure, witness=witness)
    relations, failure, witness = _check_relations(system, phi)
    if failure:
        return PhiReport(False, 0, relations, identities, failure=failure, witness=witness)

    if group.order <= PHI_FULL_GROUP_ORDER:
        groups = list(range(group.order))
    else:
        groups = sorted({0, *group.generators})
    even = True
    pairs = 0
    products = ProductCache(source)
    for x, y in monomial_pairs(source, degree_bound, groups):
        pairs += 1
        mx, my = AlgebraElement.monomial(x), AlgebraElement.monomial(y)
        if phi(products(mx, my)) != phi.multiply(phi(mx), phi(my)):
            return PhiReport(False, pairs, relations, identities, failure="homomorphism", witness=(x, y))
        even = even and all(p % 2 == 0 for p in target.multiply(mx, my).t_powers())
    odd = any(1 in image.t_powers() for image in phi.generators)
    parity = even and (odd or not any(system.parameters))
    _LOGGER.debug("%s; Phi_t checked on %d pairs", group.name, pairs)
    return PhiReport(parity, pairs, relations, identities, True, parity, None if parity else "parity")
