"""Normal-form rewriting for crossed products and twisted graded Hecke algebras."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .classify import FormFamily, verify_family
from .cocycle import TwoCocycle
from .const import _LOGGER, Strategy
from .cyclo import ONE, Cyclotomic, as_cyclotomic, to_literal
from .exceptions import FamilyVerificationError
from .matgroup import FiniteMatrixGroup

Word = tuple[int, ...]


class Monomial(NamedTuple):
    """Normal-ordered monomial v_1^e_1 ... v_n^e_n g t^m."""

    exps: tuple[int, ...]
    group: int = 0
    tpow: int = 0

    @property
    def degree(self) -> int:
        """Return the S(V)-degree."""
        return sum(self.exps)


@dataclass(frozen=True, slots=True)
class AlgebraElement:
    """Finite combination of normal monomials with nonzero coefficients."""

    terms: Mapping[Monomial, Cyclotomic] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Monomial, Cyclotomic | int | Fraction]]) -> AlgebraElement:
        """Sum possibly repeated monomials, dropping zeros."""
        total: dict[Monomial, Cyclotomic] = {}
        for mono, coeff in terms:
            value = as_cyclotomic(coeff)
            if mono in total:
                value = total[mono] + value
            if value:
                total[mono] = value
            else:
                total.pop(mono, None)
        return cls(total)

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Cyclotomic | int | Fraction = 1) -> AlgebraElement:
        """Return coeff * mono."""
        return cls.from_terms([(mono, coeff)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return AlgebraElement.from_terms([*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, factor: Cyclotomic | int | Fraction) -> AlgebraElement:
        """Multiply every coefficient by a scalar."""
        return AlgebraElement.from_terms((m, c * factor) for m, c in self.terms.items())

    def shift_t(self, amount: int) -> AlgebraElement:
        """Multiply by t^amount."""
        return AlgebraElement({m._replace(tpow=m.tpow + amount): c for m, c in self.terms.items()})

    def t_coefficient(self, power: int) -> AlgebraElement:
        """Return the coefficient of t^power as a t-free element."""
        return AlgebraElement(
            {m._replace(tpow=0): c for m, c in self.terms.items() if m.tpow == power}
        )

    def at_t_zero(self) -> AlgebraElement:
        """Drop every term with a positive t-power."""
        return self.t_coefficient(0)

    def at_t_one(self) -> AlgebraElement:
        """Specialize t = 1."""
        return AlgebraElement.from_terms((m._replace(tpow=0), c) for m, c in self.terms.items())

    def t_powers(self) -> set[int]:
        """Return the t-powers present."""
        return {m.tpow for m in self.terms}

    def degree(self) -> int:
        """Return the largest S(V)-degree, or -1 for zero."""
        return max((m.degree for m in self.terms), default=-1)

    def top_part(self) -> AlgebraElement:
        """Return the terms of maximal S(V)-degree."""
        top = self.degree()
        return AlgebraElement({m: c for m, c in self.terms.items() if m.degree == top})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)


def format_monomial(mono: Monomial, group: FiniteMatrixGroup | None = None) -> str:
    """Format a monomial as v1^2*v3*g1*t."""
    parts = [
        f"v{i + 1}" if e == 1 else f"v{i + 1}^{e}" for i, e in enumerate(mono.exps) if e
    ]
    if mono.group:
        word = group.word(mono.group) if group is not None else f"#{mono.group}"
        parts.append(f"({word})" if "*" in word else word)
    if mono.tpow:
        parts.append("t" if mono.tpow == 1 else f"t^{mono.tpow}")
    return "*".join(parts) if parts else "1"


def format_element(
    element: AlgebraElement, group: FiniteMatrixGroup | None = None, conductor: int | None = None
) -> str:
    """Format an element in normal order with cyclotomic literals."""
    if not element.terms:
        return "0"
    text = ""
    for mono in sorted(element.terms, key=_display_key):
        coeff = element.terms[mono]
        literal = to_literal(coeff, conductor)
        body = format_monomial(mono, group)
        negative = literal.startswith("-") and " " not in literal
        if negative:
            literal = literal[1:]
        if literal == "1":
            term = body
        elif " " in literal:
            term = f"({literal})" if body == "1" else f"({literal})*{body}"
        else:
            term = literal if body == "1" else f"{literal}*{body}"
        sign = "-" if negative else "+"
        if not text:
            text = f"-{term}" if negative else term
        else:
            text += f" {sign} {term}"
    return text


def _display_key(mono: Monomial) -> tuple:
    return (mono.tpow, -mono.degree, tuple(-e for e in mono.exps), mono.group)


class NormalFormAlgebra(ABC):
    """Base class for algebras spanned by normal monomials v^e g t^m.

    Words are tuples of letters: 0..n-1 are the variables and n + g is the
    group element g (the identity is never stored). Rewriting rules:

    * g v_c -> sum_r g[r][c] v_r g, plus the push terms of the subclass
    * g h -> alpha(g, h) (gh)
    * v_j v_i -> v_i v_j - sum_k a_k(v_i, v_j) t^d k for j > i
    """

    bracket_tpow: int = 1

    def __init__(
        self,
        group: FiniteMatrixGroup,
        cocycle: TwoCocycle,
        strategy: Strategy = Strategy.LEFTMOST,
    ) -> None:
        """Initialize the algebra and precompute the group action on variables."""
        self.group = group
        self.cocycle = cocycle
        self.dim = group.dim
        self.strategy = strategy
        n = self.dim
        self._action: tuple[tuple[tuple[tuple[int, Cyclotomic], ...], ...], ...] = tuple(
            tuple(
                tuple((r, m[r][c]) for r in range(n) if m[r][c])
                for c in range(n)
            )
            for m in group.elements
        )

    @abstractmethod
    def bracket_terms(self, i: int, j: int) -> tuple[tuple[int, Cyclotomic], ...]:
        """Return (k, a_k(v_i, v_j)) with a nonzero value, for i < j."""

    def push_terms(self, g: int, c: int) -> tuple[tuple[int, Cyclotomic], ...]:
        """Return extra (k, coeff) terms, times t, produced when g passes v_c."""
        return ()

    def _group_letter(self, g: int) -> Word:
        return (self.dim + g,) if g else ()

    def word_of(self, mono: Monomial) -> Word:
        """Return the letter word of a normal monomial."""
        letters = tuple(i for i, e in enumerate(mono.exps) for _ in range(e))
        return letters + self._group_letter(mono.group)

    def variable(self, i: int) -> AlgebraElement:
        """Return v_(i+1)."""
        exps = [0] * self.dim
        exps[i] = 1
        return AlgebraElement.monomial(Monomial(tuple(exps)))

    def group_element(self, g: int, coeff: Cyclotomic | int | Fraction = 1) -> AlgebraElement:
        """Return coeff times the group basis element of g."""
        return AlgebraElement.monomial(Monomial((0,) * self.dim, g), coeff)

    def one(self) -> AlgebraElement:
        """Return the unit."""
        return self.group_element(0)

    def t(self, power: int = 1) -> AlgebraElement:
        """Return t^power."""
        return AlgebraElement.monomial(Monomial((0,) * self.dim, 0, power))

    def _reducible_position(self, word: Word, strategy: Strategy) -> int | None:
        n = self.dim
        positions = range(len(word) - 1)
        if strategy is Strategy.RIGHTMOST:
            positions = reversed(positions)
        for p in positions:
            a, b = word[p], word[p + 1]
            if a >= n or a > b:
                return p
        return None

    def _rewrite(self, word: Word, p: int) -> list[tuple[Cyclotomic, Word, int]]:
        n = self.dim
        a, b = word[p], word[p + 1]
        head, tail = word[:p], word[p + 2 :]
        if a >= n and b >= n:
            g, h = a - n, b - n
            return [(self.cocycle(g, h), head + self._group_letter(self.group.mul(g, h)) + tail, 0)]
        if a >= n:
            g = a - n
            result = [(coeff, (*head, r, a, *tail), 0) for r, coeff in self._action[g][b]]
            result.extend(
                (coeff, head + self._group_letter(k) + tail, 1) for k, coeff in self.push_terms(g, b)
            )
            return result
        result = [(ONE, (*head, b, a, *tail), 0)]
        result.extend(
            (-coeff, head + self._group_letter(k) + tail, self.bracket_tpow)
            for k, coeff in self.bracket_terms(b, a)
        )
        return result

    def _monomial(self, word: Word, tpow: int) -> Monomial:
        n = self.dim
        exps = [0] * n
        g = 0
        for letter in word:
            if letter < n:
                exps[letter] += 1
            else:
                g = letter - n
        return Monomial(tuple(exps), g, tpow)

    def reduce(
        self,
        pending: Mapping[tuple[Word, int], Cyclotomic],
        strategy: Strategy | None = None,
    ) -> AlgebraElement:
        """Rewrite a combination of words to normal form."""
        strategy = strategy or self.strategy
        work = dict(pending)
        result: dict[Monomial, Cyclotomic] = {}
        while work:
            (word, tpow), coeff = work.popitem()
            if not coeff:
                continue
            p = self._reducible_position(word, strategy)
            if p is None:
                mono = self._monomial(word, tpow)
                value = result[mono] + coeff if mono in result else coeff
                if value:
                    result[mono] = value
                else:
                    del result[mono]
                continue
            for factor, new_word, dt in self._rewrite(word, p):
                key = (new_word, tpow + dt)
                value = coeff * factor
                work[key] = work[key] + value if key in work else value
        return AlgebraElement(result)

    def reduce_word(
        self,
        letters: Word,
        tpow: int = 0,
        coeff: Cyclotomic | int | Fraction = 1,
        strategy: Strategy | None = None,
    ) -> AlgebraElement:
        """Return the normal form of coeff * word * t^tpow."""
        return self.reduce({(tuple(letters), tpow): as_cyclotomic(coeff)}, strategy)

    def multiply(
        self, x: AlgebraElement, y: AlgebraElement, strategy: Strategy | None = None
    ) -> AlgebraElement:
        """Return the normal form of x * y."""
        pending: dict[tuple[Word, int], Cyclotomic] = {}
        for mx, cx in x.terms.items():
            wx = self.word_of(mx)
            for my, cy in y.terms.items():
                key = (wx + self.word_of(my), mx.tpow + my.tpow)
                value = cx * cy
                pending[key] = pending[key] + value if key in pending else value
        return self.reduce(pending, strategy)

    def product(self, *factors: AlgebraElement) -> AlgebraElement:
        """Return the ordered product of the factors."""
        result = self.one()
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def commutator(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Return xy - yx."""
        return self.multiply(x, y) - self.multiply(y, x)

    def act(self, g: int, i: int) -> AlgebraElement:
        """Return g . v_(i+1) as an element of V."""
        terms = []
        for r, coeff in self._action[g][i]:
            exps = [0] * self.dim
            exps[r] = 1
            terms.append((Monomial(tuple(exps)), coeff))
        return AlgebraElement.from_terms(terms)

    def format(self, element: AlgebraElement) -> str:
        """Format an element using group words."""
        return format_element(element, self.group, self.group.conductor)


class CrossedProductAlgebra(NormalFormAlgebra):
    """S(V) #_alpha G: variables commute exactly."""

    def bracket_terms(self, i: int, j: int) -> tuple[tuple[int, Cyclotomic], ...]:
        """Return no bracket terms."""
        return ()

    def crossed_multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Return the crossed product x y."""
        return self.multiply(x, y)


class HeckeAlgebra(NormalFormAlgebra):
    """Twisted graded Hecke algebra with [v_i, v_j] = sum_g a_g(v_i, v_j) t^d g."""

    def __init__(
        self,
        family: FormFamily,
        *,
        force: bool = False,
        bracket_tpow: int = 1,
        strategy: Strategy = Strategy.LEFTMOST,
    ) -> None:
        """Initialize from a verified family; force skips verification."""
        super().__init__(family.group, family.cocycle, strategy)
        self.family = family
        self.bracket_tpow = bracket_tpow
        if force:
            _LOGGER.warning("%s; building algebra without verifying the family", self.group.name)
        else:
            report = verify_family(family)
            if not report.passed:
                raise FamilyVerificationError(report.violation)
        n = self.dim
        support = family.support()
        self._brackets: dict[tuple[int, int], tuple[tuple[int, Cyclotomic], ...]] = {
            (i, j): tuple(
                (k, family.value(k, i, j)) for k in support if family.value(k, i, j)
            )
            for i in range(n)
            for j in range(i + 1, n)
        }
        _LOGGER.debug(
            "%s; Hecke algebra with %d nonzero forms, bracket t^%d",
            self.group.name,
            len(support),
            bracket_tpow,
        )

    def bracket_terms(self, i: int, j: int) -> tuple[tuple[int, Cyclotomic], ...]:
        """Return the cached bracket table entry."""
        return self._brackets[(i, j)]

    def crossed(self) -> CrossedProductAlgebra:
        """Return S(V) #_alpha G for the same group and cocycle."""
        return CrossedProductAlgebra(self.group, self.cocycle, self.strategy)

    def bracket_element(self, i: int, j: int) -> AlgebraElement:
        """Return sum_g a_g(v_i, v_j) g as a t-free element, for any i, j."""
        if i == j:
            return AlgebraElement()
        if i < j:
            return AlgebraElement.from_terms(
                (Monomial((0,) * self.dim, k), c) for k, c in self._brackets[(i, j)]
            )
        return -self.bracket_element(j, i)
